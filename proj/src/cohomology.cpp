#include "osres/cohomology.hpp"

namespace osres {

ExteriorQ block_sum_form(int m, int blocks, int s) {
    const int n = blocks * m;
    ExteriorQ a(n);
    for (int i = 1; i <= m; ++i) a.add_term(SetMask(1) << ((s - 1) * m + i - 1), Rational(1));
    return a;
}

bool decomposable_relation_check(const LatinHypercube& k) {
    k.validate();
    const int m = k.order, l = k.dim, n = (l + 1) * m;
    std::vector<ExteriorQ> a;
    for (int s = 1; s <= l + 1; ++s) a.push_back(block_sum_form(m, l + 1, s));

    ExteriorQ all = ExteriorQ::unit(n);
    for (const auto& f : a) all = wedge(all, f);
    const ExteriorQ lhs = boundary(all);

    ExteriorQ tail = ExteriorQ::unit(n);
    for (int s = 1; s < l + 1; ++s) tail = wedge(tail, a[s]);
    const ExteriorQ second = -wedge(a[0] - a[1], boundary(tail));

    ExteriorQ third = ExteriorQ::unit(n);
    for (int s = 0; s < l; ++s) third = wedge(third, a[s] - a[s + 1]);
    third = Rational((l % 2 == 0) ? m : -m) * third;

    ExteriorQ fourth(n);
    for (SetMask c : circuit_family(k).members)
        fourth += boundary(ExteriorQ::monomial(n, c, Rational(1)));
    fourth = Rational(m) * fourth;

    return lhs == second && lhs == third && lhs == fourth;
}

ExteriorQ nonvanishing_witness(const LatinHypercube& k, const WeightQ& weight) {
    k.validate();
    const int m = k.order, l = k.dim, n = (l + 1) * m;
    if (weight.size() != n) throw std::invalid_argument("weight length mismatch");
    if (weight.is_zero()) throw std::invalid_argument("witness undefined");
    const auto bv = block_values(weight, m);
    if (!bv || static_cast<int>(bv->size()) != l + 1)
        throw std::invalid_argument("weight must be block-constant");
    {
        Rational s(0);
        for (const auto& v : *bv) s += v;
        if (!s.is_zero()) throw std::invalid_argument("block values must sum to zero");
    }
    int t = 0;
    for (int b = 1; b <= l + 1; ++b)
        if (!(*bv)[b - 1].is_zero()) {
            t = b;
            break;
        }

    // b = d(wedge of all block forms except a_t), a (l-1)-form.
    ExteriorQ prod = ExteriorQ::unit(n);
    for (int b = 1; b <= l + 1; ++b) {
        if (b == t) continue;
        prod = wedge(prod, block_sum_form(m, l + 1, b));
    }
    const ExteriorQ b_form = boundary(prod);

    const OSAlgebraQ alg(build_matroid(k));
    const ExteriorQ reduced = alg.reduce(b_form);
    if (reduced.is_zero()) throw std::logic_error("witness vanishes in A(M)");
    const ExteriorQ killed = alg.reduce(wedge(weight.one_form(n), b_form));
    if (!killed.is_zero()) throw std::logic_error("witness is not a cocycle");
    // Not a coboundary: appending its coordinate vector to the image of
    // e_lambda : A^{l-2} -> A^{l-1} must raise the rank.
    const MatrixQ mult = alg.multiplication_matrix(weight.values, l - 2);
    const std::vector<Rational> coords = alg.coordinates(reduced, l - 1);
    MatrixQ col(coords.size(), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) col(i, 0) = coords[i];
    if (mult.hstack(col).rank() != mult.rank() + 1)
        throw std::logic_error("witness is a coboundary");
    return reduced;
}

int h1_dimension_mols(const std::vector<LatinSquare>& squares, const WeightQ& weight) {
    const Matroid m = build_matroid_mols(squares);
    const auto report = cohomology(OSAlgebraQ(m), weight);
    return report.dims_A.at(1);
}

}  // namespace osres
