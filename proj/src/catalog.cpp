#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "osres/realization.hpp"

namespace osres {

namespace {

// The order-3 square of the Pappus example, k(i,j) = j - i mod 3.
LatinSquare pappus_square() { return LatinSquare{3, {1, 2, 3, 3, 1, 2, 2, 3, 1}}; }

// The Klein table, the second order-4 main class.
LatinSquare klein_square() {
    return LatinSquare{4, {1, 2, 3, 4, 2, 1, 4, 3, 3, 4, 1, 2, 4, 3, 2, 1}};
}

// Multiplication pattern of the m-th roots of unity with exponents stored
// 1..m: cell (p,q) = r with r = p+q mod m.
LatinSquare root_product_square(int m) {
    LatinSquare k{m, std::vector<int>(m * m, 0)};
    for (int p = 1; p <= m; ++p)
        for (int q = 1; q <= m; ++q) k.at(p, q) = (p + q - 1) % m + 1;
    return k;
}

ConfigurationQ rational_config(int rank, const std::vector<std::vector<long>>& rows) {
    ConfigurationQ c;
    c.rank = rank;
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (long x : r) v.emplace_back(x);
        c.vectors.push_back(std::move(v));
    }
    return c;
}

LatinHypercube order2_cube() { return LatinHypercube{3, 2, {1, 2, 2, 1, 2, 1, 1, 2}}; }

CatalogEntry near_pencil() {
    CatalogEntry e;
    e.name = "near-pencil";
    e.description = "three concurrent lines in the projective plane (order m=1)";
    e.config = rational_config(2, {{1, 0}, {0, 1}, {1, 1}});
    e.expected = Matroid::uniform(2, 3);
    e.weight = WeightQ::blocks(1, {Rational(1), Rational(1), Rational(-2)});
    e.degree = 1;
    e.expected_dim = 1;
    return e;
}

CatalogEntry ceva() {
    CatalogEntry e;
    e.name = "ceva";
    e.description = "the 6-line Ceva figure (order m=2)";
    // Ordered so the triple points follow the Latin-square block pattern
    // {1,2}, {3,4}, {5,6}: circuits (1,3,5), (1,4,6), (2,3,6), (2,4,5).
    e.config = rational_config(3, {{1, 0, 0},
                                   {0, 1, -1},
                                   {0, 1, 0},
                                   {1, 0, -1},
                                   {1, -1, 0},
                                   {0, 0, 1}});
    e.expected = build_matroid(LatinHypercube{2, 2, {1, 2, 2, 1}});
    e.weight = WeightQ::blocks(2, {Rational(1), Rational(1), Rational(-2)});
    e.degree = 1;
    e.expected_dim = 1;
    return e;
}

CatalogEntry pappus() {
    CatalogEntry e;
    e.name = "pappus";
    e.description = "the 9-line Pappus figure (order m=3)";
    // Coordinates solved from the nine collinearity constraints: two point
    // triples on lines y=0 and y=1 and the three hexagon intersection
    // points; the ninth incidence closes by the Pappus theorem. Ordered so
    // the incidences are transversal to the blocks {1,2,3}, {4,5,6},
    // {7,8,9}.
    e.config = rational_config(3, {{0, 0, 1},
                                   {0, 1, 1},
                                   {5, 1, 3},
                                   {1, 0, 1},
                                   {1, 1, 1},
                                   {6, 2, 5},
                                   {2, 0, 1},
                                   {3, 1, 1},
                                   {1, 1, 2}});
    e.expected = build_matroid(pappus_square().as_hypercube());
    e.weight = WeightQ::blocks(3, {Rational(1), Rational(1), Rational(-2)});
    e.degree = 1;
    e.expected_dim = 1;
    return e;
}

CatalogEntry hessian() {
    CatalogEntry e;
    e.name = "hessian";
    e.description = "the 12 lines through the inflection points of a cubic (m=3, s=2)";
    const Cyclotomic w = Cyclotomic::zeta(3);
    const Cyclotomic w2 = w * w;
    const Cyclotomic one = Cyclotomic::from_rational(Rational(1), 3);
    const Cyclotomic zero = Cyclotomic::from_rational(Rational(0), 3);
    ConfigurationC c;
    c.rank = 3;
    c.vectors = {{one, zero, zero}, {zero, one, zero}, {zero, zero, one},
                 {one, one, one},   {one, w2, w},      {one, w, w2},
                 {one, w, w},       {one, one, w2},    {one, w2, one},
                 {one, w2, w2},     {one, w, one},     {one, one, w}};
    e.config = std::move(c);
    const LatinSquare k1 = pappus_square();
    const LatinSquare k2{3, {1, 2, 3, 2, 3, 1, 3, 1, 2}};
    e.expected = build_matroid_mols({k1, k2});
    e.weight = WeightQ::blocks(3, {Rational(1), Rational(1), Rational(1), Rational(-3)});
    e.degree = 1;
    e.expected_dim = 2;
    return e;
}

CatalogEntry monomial(int m) {
    if (m < 2) throw std::invalid_argument("monomial arrangement needs m >= 2");
    CatalogEntry e;
    std::ostringstream name;
    name << "monomial(" << m << ")";
    e.name = name.str();
    e.description = "the monomial arrangement with defining polynomial "
                    "(x1^m-x2^m)(x1^m-x3^m)(x2^m-x3^m)";
    const Cyclotomic one = Cyclotomic::from_rational(Rational(1), m);
    const Cyclotomic zero = Cyclotomic::from_rational(Rational(0), m);
    auto zeta_pow = [m](int k) {
        Cyclotomic z = Cyclotomic::from_rational(Rational(1), m);
        for (int t = 0; t < k; ++t) z *= Cyclotomic::zeta(m);
        return z;
    };
    ConfigurationC c;
    c.rank = 3;
    // Blocks: x1 - z^k x2, then x2 - z^k x3, then x1 - z^k x3, k = 1..m.
    for (int k = 1; k <= m; ++k) c.vectors.push_back({one, -zeta_pow(k), zero});
    for (int k = 1; k <= m; ++k) c.vectors.push_back({zero, one, -zeta_pow(k)});
    for (int k = 1; k <= m; ++k) c.vectors.push_back({one, zero, -zeta_pow(k)});
    e.config = std::move(c);
    const Matroid u2m = Matroid::uniform(2, m);
    e.expected = degenerate_with_blocks({root_product_square(m)}, {u2m, u2m, u2m});
    e.weight = WeightQ::blocks(m, {Rational(1), Rational(1), Rational(-2)});
    e.degree = 1;
    e.expected_dim = 1;
    return e;
}

CatalogEntry higher_a(long b, long c) {
    const std::vector<long> vals{0, 1, b, c, b * c};
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i] == vals[j])
                throw std::invalid_argument("parameters must keep 0,1,b,c,bc distinct");
    CatalogEntry e;
    std::ostringstream name;
    name << "higher-A(" << b << "," << c << ")";
    e.name = name.str();
    e.description = "rank-4 realization of the matroid of the order-2 Latin cube";
    e.config = rational_config(4, {{1, 0, 0, 0},
                                   {0, 1, 0, 0},
                                   {0, 0, 1, 0},
                                   {0, 0, 0, 1},
                                   {1, 1, 1, 1},
                                   {1, b * c, b, c},
                                   {1, c, 1, c},
                                   {1, b, b, 1}});
    e.expected = build_matroid(order2_cube());
    e.weight = WeightQ::blocks(
        2, {Rational(1), Rational(1), Rational(1), Rational(-3)});
    e.degree = 2;
    e.expected_dim = 1;
    e.dim_is_exact = false;
    return e;
}

CatalogEntry higher_b() {
    CatalogEntry e;
    e.name = "higher-B";
    e.description =
        "rank-4 arrangement (x1-x2)(x1+x2)(x2-x3)(x2+x3)(x3-x4)(x3+x4)(x4-x1)(x4+x1)";
    e.config = rational_config(4, {{1, -1, 0, 0},
                                   {1, 1, 0, 0},
                                   {0, 1, -1, 0},
                                   {0, 1, 1, 0},
                                   {0, 0, 1, -1},
                                   {0, 0, 1, 1},
                                   {-1, 0, 0, 1},
                                   {1, 0, 0, 1}});
    // No 3-circuits; 4-circuits are exactly C[K] of the order-2 cube plus
    // the four block quadruples.
    CircuitFamily top{8, 4, {}};
    for (SetMask c : circuit_family(order2_cube()).members) top.members.push_back(c);
    top.members.push_back(mask_of({1, 2, 3, 4}));
    top.members.push_back(mask_of({1, 2, 7, 8}));
    top.members.push_back(mask_of({3, 4, 5, 6}));
    top.members.push_back(mask_of({5, 6, 7, 8}));
    std::sort(top.members.begin(), top.members.end());
    e.expected = matroid_from_top_circuits(top, 3, 8);
    e.compare_circuits_literally = true;
    e.weight = WeightQ::blocks(
        2, {Rational(1), Rational(1), Rational(1), Rational(-3)});
    e.degree = 2;
    e.expected_dim = 1;
    e.dim_is_exact = false;
    return e;
}

ConfigurationQ config_from_strings(int rank, const std::vector<std::vector<const char*>>& rows) {
    ConfigurationQ c;
    c.rank = rank;
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (const char* x : r) v.push_back(Rational::from_string(x));
        c.vectors.push_back(std::move(v));
    }
    return c;
}

// Circuits of the degeneration of a simple rank-3 matroid by parallel
// pairs: close the triple family under (a) substituting an element by its
// parallel partner and (b) condition (C_3), then list the pair circuits,
// the closed triples, and the 4-sets containing neither.
Matroid parallel_degeneration(int n, const std::vector<SetMask>& triples,
                              const std::vector<std::pair<int, int>>& pairs) {
    std::vector<SetMask> pair_masks;
    for (auto [u, v] : pairs) pair_masks.push_back(mask_of({u, v}));
    auto contains_pair = [&](SetMask s) {
        for (SetMask p : pair_masks)
            if ((p & s) == p) return true;
        return false;
    };
    std::unordered_set<SetMask> closed(triples.begin(), triples.end());
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<SetMask> snapshot(closed.begin(), closed.end());
        for (SetMask t : snapshot)
            for (auto [u, v] : pairs)
                for (int swap = 0; swap < 2; ++swap) {
                    const int from = swap ? v : u, to = swap ? u : v;
                    const SetMask fbit = SetMask(1) << (from - 1);
                    const SetMask tbit = SetMask(1) << (to - 1);
                    if (!(t & fbit) || (t & tbit)) continue;
                    const SetMask substituted = (t & ~fbit) | tbit;
                    if (!contains_pair(substituted) && closed.insert(substituted).second)
                        changed = true;
                }
        const std::vector<SetMask> again(closed.begin(), closed.end());
        for (std::size_t i = 0; i < again.size(); ++i)
            for (std::size_t j = i + 1; j < again.size(); ++j) {
                const SetMask u = again[i] | again[j];
                if (set_size(u) != 4) continue;
                SetMask rest = u;
                while (rest) {
                    const SetMask bit = rest & -rest;
                    rest &= rest - 1;
                    const SetMask sub = u & ~bit;
                    if (!contains_pair(sub) && closed.insert(sub).second) changed = true;
                }
            }
    }
    std::vector<SetMask> circuits = pair_masks;
    circuits.insert(circuits.end(), closed.begin(), closed.end());
    for (SetMask s : all_subsets_of_size(n, 4)) {
        bool minimal = !contains_pair(s);
        if (minimal)
            for (SetMask t : closed)
                if ((t & s) == t) {
                    minimal = false;
                    break;
                }
        if (minimal) circuits.push_back(s);
    }
    return Matroid::from_circuits(n, std::move(circuits));
}

// Degeneration of the Klein-square matroid with 1 || 2, 5 || 6, 11 || 12:
// simplifying the parallel pairs leaves the incidence pattern of the nine
// reflection planes x, y, z, x+-y, y+-z, x+-z (three 4-point lines pairwise
// meeting in a doubled point, four triple points).
CatalogEntry b3_degeneration() {
    CatalogEntry e;
    e.name = "b3-degeneration";
    e.description =
        "the reflection arrangement xyz(x-y)(x+y)(y-z)(y+z)(x-z)(x+z) with three lines "
        "doubled, a non-simple degeneration of the Klein-square matroid";
    e.config = rational_config(3, {{1, 0, 0},    // x       (rows: 1 || 2)
                                   {2, 0, 0},    // 2x
                                   {0, 1, -1},   // y-z
                                   {0, 1, 1},    // y+z
                                   {0, 1, 0},    // y       (columns: 5 || 6)
                                   {0, 3, 0},    // 3y
                                   {1, 0, -1},   // x-z
                                   {1, 0, 1},    // x+z
                                   {1, -1, 0},   // x-y     (symbols: 11 || 12)
                                   {1, 1, 0},    // x+y
                                   {0, 0, 1},    // z
                                   {0, 0, 5}});  // 5z
    e.expected = parallel_degeneration(
        12, circuit_family(klein_square().as_hypercube()).members, {{1, 2}, {5, 6}, {11, 12}});
    e.compare_circuits_literally = true;
    e.weight = WeightQ::blocks(4, {Rational(1), Rational(1), Rational(-2)});
    e.degree = 1;
    e.expected_dim = 1;
    return e;
}

// Experimental order-4 realizations. The exact coordinates come from the
// group law on rational cubic curves: three points of a cubic are collinear
// iff they sum to zero, so the cosets g+T, 2g+T, -3g+T of a torsion
// subgroup T give three quadruples whose cross incidences follow the
// addition table of T, and chords meet the cubic nowhere else.

// T = Z4 generated by (0,0) on y^2 + xy - 7y = x^3 - 7x^2, g = (70, 525):
// the addition table realizes the cyclic main class.
CatalogEntry kirkman() {
    CatalogEntry e;
    e.name = "kirkman";
    e.description = "12 real lines realizing the cyclic order-4 matroid (experimental)";
    e.experimental = true;
    e.config = config_from_strings(
        3, {{"70", "525", "1"},
            {"3/4", "5/8", "1"},
            {"70/9", "-196/27", "1"},
            {"-21/25", "882/125", "1"},
            {"490567/25281", "250915280/4019679", "1"},
            {"89040/76729", "44772651/21253933", "1"},
            {"70081/6400", "-12199911/512000", "1"},
            {"-89040/64009", "86867200/16194277", "1"},
            {"344813589190/33389887441", "-125520479609888475/6101300742206489", "1"},
            {"-23018920317/17046435844", "12597503683177685/2225616756664328", "1"},
            {"344813589190/15869196729", "152629030591575524/1999090319542317", "1"},
            {"161132442219/142343971225", "101523789103253202/53704245183624125", "1"}});
    // k(i,j) = -(i-1)-(j-1) mod 4: the collinearity t_i + t_j + t_k = 0.
    LatinSquare k{4, std::vector<int>(16, 0)};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) k.at(i, j) = ((8 - (i - 1) - (j - 1)) % 4) + 1;
    e.expected = build_matroid(k.as_hypercube());
    e.weight = WeightQ::blocks(4, {Rational(1), Rational(1), Rational(-2)});
    e.degree = 1;
    e.expected_dim = 1;
    return e;
}

// T = the full 2-torsion of y^2 = x^3 - 25x, g = (-4, 6): the Klein table.
CatalogEntry steiner() {
    CatalogEntry e;
    e.name = "steiner";
    e.description = "12 real lines realizing the Klein order-4 matroid (experimental)";
    e.experimental = true;
    e.config = config_from_strings(
        3, {{"-4", "6", "1"},
            {"25/4", "75/8", "1"},
            {"-5/9", "-100/27", "1"},
            {"45", "-300", "1"},
            {"1681/144", "-62279/1728", "1"},
            {"-3600/1681", "-455700/68921", "1"},
            {"12005/961", "1205400/29791", "1"},
            {"-4805/2401", "762600/117649", "1"},
            {"-2439844/5094049", "-39601568754/11497268593", "1"},
            {"127351225/2439844", "-1430549626725/3811036328", "1"},
            {"-115152005/27910089", "845927888300/147449000187", "1"},
            {"139550445/23030401", "931243391100/110522894399", "1"}});
    e.expected = build_matroid(klein_square().as_hypercube());
    e.weight = WeightQ::blocks(4, {Rational(1), Rational(1), Rational(-2)});
    e.degree = 1;
    e.expected_dim = 1;
    return e;
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
    if (name == "near-pencil") return near_pencil();
    if (name == "ceva") return ceva();
    if (name == "pappus") return pappus();
    if (name == "hessian") return hessian();
    if (name == "higher-B") return higher_b();
    if (name == "b3-degeneration") return b3_degeneration();
    if (name == "kirkman") return kirkman();
    if (name == "steiner") return steiner();
    if (name.rfind("monomial(", 0) == 0 && name.back() == ')') {
        const int m = std::stoi(name.substr(9, name.size() - 10));
        return monomial(m);
    }
    if (name.rfind("higher-A(", 0) == 0 && name.back() == ')') {
        const std::string args = name.substr(9, name.size() - 10);
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("higher-A needs two parameters, e.g. higher-A(2,3)");
        return higher_a(std::stol(args.substr(0, comma)), std::stol(args.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
    return {"near-pencil", "ceva",          "pappus",   "hessian",
            "monomial(3)", "monomial(4)",   "higher-A(2,3)", "higher-B",
            "b3-degeneration", "kirkman",   "steiner"};
}

}  // namespace osres
