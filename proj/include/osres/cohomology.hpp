#pragma once

#include <optional>
#include <vector>

#include "osres/latin.hpp"
#include "osres/os_algebra.hpp"
#include "osres/parallel.hpp"

namespace osres {

// Weight lambda = (lambda_1..lambda_n); e_lambda = sum lambda_i e_i.
template <class F>
struct Weight {
    std::vector<F> values;

    Weight() = default;
    explicit Weight(std::vector<F> v) : values(std::move(v)) {}

    // Block-constant weight: each block value repeated m times.
    static Weight blocks(int m, const std::vector<F>& block_values) {
        Weight w;
        for (const F& v : block_values)
            for (int i = 0; i < m; ++i) w.values.push_back(v);
        return w;
    }

    int size() const { return static_cast<int>(values.size()); }

    bool is_zero() const {
        using osres::is_zero;
        for (const F& v : values)
            if (!is_zero(v)) return false;
        return true;
    }

    F sum() const {
        F s(0);
        for (const F& v : values) s += v;
        return s;
    }

    bool sum_zero() const {
        using osres::is_zero;
        return is_zero(sum());
    }

    ExteriorElement<F> one_form(int n) const {
        if (size() != n) throw std::invalid_argument("weight length mismatch");
        ExteriorElement<F> e(n);
        for (int i = 0; i < n; ++i) e.add_term(SetMask(1) << i, values[i]);
        return e;
    }
};

using WeightQ = Weight<Rational>;

// dim H^p of (A(M), e_lambda) for p = 0..rank, and of (dA(M), e_lambda) for
// p = 0..rank-1 when the weight sums to zero.
template <class F>
struct CohomologyReport {
    std::vector<int> dims_A;
    std::optional<std::vector<int>> dims_dA;
    bool trivial_weight = false;
    Weight<F> weight;
};

using CohomologyReportQ = CohomologyReport<Rational>;

// Exact cohomology of the complex (A(M), e_lambda), via rank-nullity on the
// nbc-coordinate multiplication matrices. With sum(lambda) = 0 the second
// complex (dA(M), e_lambda) is computed directly — dA^p materialized as the
// column space of the boundary matrix, e_lambda restricted to it — and the
// splitting dim H^{p+1}(A) = dim H^{p+1}(dA) + dim H^p(dA) is verified.
template <class F>
CohomologyReport<F> cohomology(const OSAlgebra<F>& alg, const Weight<F>& weight) {
    const int n = alg.generators();
    const int r = alg.rank();
    if (weight.size() != n) throw std::invalid_argument("weight length mismatch");

    CohomologyReport<F> report;
    report.weight = weight;

    if (weight.is_zero()) {
        report.trivial_weight = true;
        for (int p = 0; p <= r; ++p) report.dims_A.push_back(alg.dimension(p));
        std::vector<int> ddims;
        for (int p = 0; p + 1 <= r; ++p)
            ddims.push_back(static_cast<int>(alg.boundary_matrix(p).rank()));
        report.dims_dA = std::move(ddims);
        return report;
    }

    // rank of e_lambda : A^p -> A^{p+1}, p = 0..r (top map is zero). The
    // algebra is read-only here, so the per-degree matrices may be
    // assembled and ranked concurrently.
    std::vector<std::size_t> mult_rank(r + 1, 0);
    std::vector<Matrix<F>> mult(r + 1);
    parallel_for(r, [&](int p) {
        mult[p] = alg.multiplication_matrix(weight.values, p);
        mult_rank[p] = mult[p].rank();
    });
    mult[r] = Matrix<F>(0, alg.dimension(r));

    for (int p = 0; p <= r; ++p) {
        const std::size_t below = p > 0 ? mult_rank[p - 1] : 0;
        report.dims_A.push_back(alg.dimension(p) - static_cast<int>(mult_rank[p]) -
                                static_cast<int>(below));
    }

    if (!weight.sum_zero()) return report;

    // dA^p = image of d_M : A^{p+1} -> A^p; restrict e_lambda to it.
    std::vector<int> d_dim(r, 0);
    std::vector<std::size_t> res_rank(r, 0);
    std::vector<Matrix<F>> basis(r);
    parallel_for(r, [&](int p) {
        const Matrix<F> dmat = alg.boundary_matrix(p);
        basis[p] = dmat.select_columns(dmat.independent_columns());
        d_dim[p] = static_cast<int>(basis[p].cols());
    });
    for (int p = 0; p < r; ++p) {
        const Matrix<F> restricted = mult[p] * basis[p];
        // Membership: e_lambda(dA^p) must land inside dA^{p+1}.
        if (p + 1 < r) {
            if (basis[p + 1].hstack(restricted).rank() != static_cast<std::size_t>(d_dim[p + 1]))
                throw std::logic_error("e_lambda does not preserve the dA complex");
        } else if (!restricted.is_zero()) {
            throw std::logic_error("e_lambda does not preserve the dA complex");
        }
        res_rank[p] = restricted.rank();
    }
    std::vector<int> ddims(r, 0);
    for (int p = 0; p < r; ++p) {
        const std::size_t below = p > 0 ? res_rank[p - 1] : 0;
        ddims[p] = d_dim[p] - static_cast<int>(res_rank[p]) - static_cast<int>(below);
    }
    // Splitting identity, with H^r(dA) = 0.
    for (int p = 0; p + 1 <= r; ++p) {
        const int upper = p + 1 < r ? ddims[p + 1] : 0;
        if (report.dims_A[p + 1] != upper + ddims[p])
            throw std::logic_error("splitting identity violated");
    }
    report.dims_dA = std::move(ddims);
    return report;
}

template <class F>
CohomologyReport<F> cohomology(const Matroid& m, const Weight<F>& weight) {
    return cohomology(OSAlgebra<F>(m), weight);
}

// Block values of a block-constant weight on l+1 blocks of size m; nullopt
// when the weight is not block-constant.
template <class F>
std::optional<std::vector<F>> block_values(const Weight<F>& w, int m) {
    if (m <= 0 || w.size() % m != 0) return std::nullopt;
    std::vector<F> out;
    for (int b = 0; b * m < w.size(); ++b) {
        const F& v = w.values[b * m];
        for (int i = 1; i < m; ++i)
            if (!(w.values[b * m + i] == v)) return std::nullopt;
        out.push_back(v);
    }
    return out;
}

// The explicit non-vanishing cocycle of the main theorem: for a block weight
// with zero block sum and some nonzero block value lambda_t, the (l-1)-form
// b = d(a_1 ^ ... ^ a_{l+1} with the t-th factor omitted), where a_s is the
// sum of the generators of block s. Returns b in nbc coordinates after
// certifying: b != 0 in A, e_lambda ^ b = 0 in A, and b is not in the image
// of e_lambda : A^{l-2} -> A^{l-1}.
ExteriorQ nonvanishing_witness(const LatinHypercube& k, const WeightQ& weight);

// dim H^1(A(M[K_1..K_s]), e_lambda) for mutually orthogonal squares and an
// (s+2)-block weight; equals s by the orthogonality theorem.
int h1_dimension_mols(const std::vector<LatinSquare>& squares, const WeightQ& weight);

// Sum of generators of block s (1-based) among l+1 blocks of size m.
ExteriorQ block_sum_form(int m, int blocks, int s);

// The decomposable relation of a Latin hypercube, checked literally in E:
//   d(a_1 ^ ... ^ a_{l+1}) = -(a_1 - a_2) ^ d(a_2 ^ ... ^ a_{l+1})
//                          = (-1)^l m (a_1 - a_2) ^ ... ^ (a_l - a_{l+1})
//                          = m * sum over C[K] of d(e_S).
// True for every valid Latin hypercube.
bool decomposable_relation_check(const LatinHypercube& k);

}  // namespace osres
