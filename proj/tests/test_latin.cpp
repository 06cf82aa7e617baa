#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "osres/latin.hpp"
#include "support/corpus.hpp"

using namespace osres;

namespace {

std::vector<std::vector<int>> circuit_lists(const CircuitFamily& fam) {
    std::vector<std::vector<int>> out;
    for (SetMask m : fam.members) out.push_back(elements_of(m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("validation accepts generators and rejects broken arrays") {
    for (const auto& k : corpus::lemma_corpus()) CHECK_NOTHROW(k.validate());
    for (int p : {2, 3, 5})
        for (const auto& k : mols_prime(p, p - 1)) CHECK_NOTHROW(k.validate());

    CHECK_THROWS_AS((LatinHypercube{2, 2, {1, 2, 1, 2}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatinHypercube{2, 2, {1, 2, 2}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatinHypercube{2, 2, {1, 2, 2, 5}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatinHypercube{3, 2, {1, 2, 2, 1, 2, 1, 1, 1}}.validate()),
                    std::invalid_argument);
}

TEST_CASE("conjugates") {
    const LatinSquare k = corpus::order3();
    CHECK(conjugate(k, {1, 2, 3}) == k);
    // Transpose: swap the row and column roles.
    const LatinSquare t = conjugate(k, {2, 1, 3});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(t.at(j, i) == k.at(i, j));
    CHECK_THROWS_AS(conjugate(k, {1, 1, 3}), std::invalid_argument);

    std::mt19937_64 rng(13);
    // conjugate(conjugate(K, s), s^{-1}) = K, and T(K) is preserved.
    for (const auto& base : {corpus::order3(), corpus::order4_cyclic(), corpus::order4_klein()})
        for (int trial = 0; trial < 10; ++trial) {
            const auto sigma = corpus::random_sigma(rng);
            std::array<int, 3> inverse{};
            for (int r = 0; r < 3; ++r) inverse[sigma[r] - 1] = r + 1;
            const LatinSquare once = conjugate(base, sigma);
            once.validate();
            CHECK(conjugate(once, inverse) == base);
            // Triple systems agree.
            std::vector<std::vector<int>> t1, t2;
            for (int i = 1; i <= base.order; ++i)
                for (int j = 1; j <= base.order; ++j) {
                    t1.push_back({i, base.order + j, 2 * base.order + base.at(i, j)});
                    std::array<int, 3> triple{};
                    triple[sigma[0] - 1] = i;
                    triple[sigma[1] - 1] = j;
                    triple[sigma[2] - 1] = once.at(i, j);
                    t2.push_back({triple[0], base.order + triple[1], 2 * base.order + triple[2]});
                }
            std::sort(t1.begin(), t1.end());
            std::sort(t2.begin(), t2.end());
            CHECK(t1 == t2);
        }
}

TEST_CASE("isotopy and main-class canonical forms") {
    std::mt19937_64 rng(20240813);
    // Canonical form is constant on isotopy and conjugate orbits.
    for (const auto& base : {corpus::order3(), corpus::order4_cyclic(), corpus::order4_klein()}) {
        const LatinSquare canon = main_class_canonical(base);
        for (int trial = 0; trial < 50; ++trial) {
            LatinSquare moved = corpus::random_isotopy(base, rng);
            if (trial % 2) moved = conjugate(moved, corpus::random_sigma(rng));
            CHECK(are_isotopic(base, corpus::random_isotopy(base, rng)));
            CHECK(main_class_canonical(moved) == canon);
        }
    }
    // The two order-4 displays have distinct canonicals.
    CHECK(main_class_canonical(corpus::order4_cyclic()) !=
          main_class_canonical(corpus::order4_klein()));
    // The orthogonal order-3 pair is isotopic but distinct as squares.
    CHECK(corpus::mols3_first() != corpus::mols3_second());
    CHECK(are_isotopic(corpus::mols3_first(), corpus::mols3_second()));
    CHECK(main_class_canonical(corpus::mols3_first()) ==
          main_class_canonical(corpus::mols3_second()));
}

TEST_CASE("main-class counts for small orders") {
    CHECK(count_main_classes(1) == 1);
    CHECK(count_main_classes(2) == 1);
    CHECK(count_main_classes(3) == 1);
    CHECK(count_main_classes(4) == 2);
    CHECK(count_main_classes(5) == 2);
    CHECK_THROWS_WITH_AS(count_main_classes(7), "unsupported order", std::invalid_argument);

    CHECK(reduced_squares(4).size() == 4);
    CHECK(reduced_squares(5).size() == 56);

    // Representatives really represent distinct classes.
    const auto reps = main_class_representatives(4);
    REQUIRE(reps.size() == 2);
    CHECK_FALSE(main_class_canonical(reps[0]) == main_class_canonical(reps[1]));
}

TEST_CASE("orthogonality") {
    CHECK(are_orthogonal(corpus::mols3_first(), corpus::mols3_second()));
    CHECK_FALSE(are_orthogonal(corpus::order3(), corpus::order3()));
    CHECK_THROWS_AS(are_orthogonal(corpus::order3(), corpus::order2()), std::invalid_argument);

    SUBCASE("prime-field generator") {
        const auto squares = mols_prime(5, 4);
        REQUIRE(squares.size() == 4);
        for (std::size_t i = 0; i < squares.size(); ++i)
            for (std::size_t j = i + 1; j < squares.size(); ++j)
                CHECK(are_orthogonal(squares[i], squares[j]));
        CHECK_THROWS_AS(mols_prime(6, 2), std::invalid_argument);
        CHECK_THROWS_AS(mols_prime(5, 5), std::invalid_argument);
    }
}

TEST_CASE("subsquare search") {
    const auto subs = find_subsquares(corpus::order4_cyclic(), 2);
    bool found = false;
    for (const auto& s : subs)
        if (s.row_indices == std::vector<int>{1, 3} && s.col_indices == std::vector<int>{2, 4}) {
            found = true;
            CHECK(s.symbols == std::vector<int>{2, 4});
        }
    CHECK(found);
    CHECK(find_subsquares(corpus::order3(), 2).empty());
    CHECK_FALSE(find_subsquares(corpus::order4_klein(), 2).empty());
}

TEST_CASE("circuit families match the worked displays") {
    CHECK(circuit_lists(circuit_family(corpus::order3().as_hypercube())) ==
          std::vector<std::vector<int>>{{1, 4, 7},
                                        {1, 5, 8},
                                        {1, 6, 9},
                                        {2, 4, 9},
                                        {2, 5, 7},
                                        {2, 6, 8},
                                        {3, 4, 8},
                                        {3, 5, 9},
                                        {3, 6, 7}});
    CHECK(circuit_lists(circuit_family(corpus::order4_cyclic().as_hypercube())) ==
          std::vector<std::vector<int>>{{1, 5, 9},  {1, 6, 10}, {1, 7, 11}, {1, 8, 12},
                                        {2, 5, 12}, {2, 6, 9},  {2, 7, 10}, {2, 8, 11},
                                        {3, 5, 11}, {3, 6, 12}, {3, 7, 9},  {3, 8, 10},
                                        {4, 5, 10}, {4, 6, 11}, {4, 7, 12}, {4, 8, 9}});
    CHECK(circuit_lists(circuit_family(corpus::order4_klein().as_hypercube())) ==
          std::vector<std::vector<int>>{{1, 5, 9},  {1, 6, 10}, {1, 7, 11}, {1, 8, 12},
                                        {2, 5, 10}, {2, 6, 9},  {2, 7, 12}, {2, 8, 11},
                                        {3, 5, 11}, {3, 6, 12}, {3, 7, 9},  {3, 8, 10},
                                        {4, 5, 12}, {4, 6, 11}, {4, 7, 10}, {4, 8, 9}});
    CHECK(circuit_lists(circuit_family(corpus::cube2())) ==
          std::vector<std::vector<int>>{{1, 3, 5, 7},
                                        {1, 3, 6, 8},
                                        {1, 4, 5, 8},
                                        {1, 4, 6, 7},
                                        {2, 3, 5, 8},
                                        {2, 3, 6, 7},
                                        {2, 4, 5, 7},
                                        {2, 4, 6, 8}});
    // The Hessian pair, shifted: C[K_2] has symbols in block 10..12.
    const Matroid hess = build_matroid_mols({corpus::mols3_first(), corpus::mols3_second()});
    for (const auto& t : std::vector<std::vector<int>>{
             {1, 4, 10}, {1, 5, 11}, {1, 6, 12}, {2, 4, 11}, {2, 5, 12},
             {2, 6, 10}, {3, 4, 12}, {3, 5, 10}, {3, 6, 11}})
        CHECK(hess.is_dependent_set(mask_of(t)));
}

TEST_CASE("matroid builders") {
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(build_matroid(LatinHypercube{2, 1, {1}}), std::invalid_argument);
        CHECK_THROWS_AS(build_matroid(LatinHypercube{1, 3, {1, 2, 3}}), std::invalid_argument);
    }
    SUBCASE("MOLS builder with one square agrees with the plain builder") {
        CHECK(build_matroid_mols({corpus::order3()}) ==
              build_matroid(corpus::order3().as_hypercube()));
    }
    SUBCASE("order 1 gives the rank-2 uniform matroid") {
        const LatinSquare one{1, {1}};
        CHECK(build_matroid_mols({one}) == Matroid::uniform(2, 3));
    }
    SUBCASE("non-orthogonal input is rejected") {
        CHECK_THROWS_WITH_AS(build_matroid_mols({corpus::order3(), corpus::order3()}),
                             "squares are not mutually orthogonal", std::invalid_argument);
    }
    SUBCASE("plain MOLS blocks carry no internal triples; degenerate blocks are U_{2,m}") {
        // Every X_{i,j} meets a block in one point, so the plain
        // construction restricts freely to each block (the Hessian lines
        // x, y, z are not concurrent).
        const Matroid m = build_matroid_mols({corpus::mols3_first(), corpus::mols3_second()});
        for (int b = 0; b < 4; ++b) {
            SetMask block = 0;
            for (int i = 1; i <= 3; ++i) block |= SetMask(1) << (3 * b + i - 1);
            CHECK(m.restriction(block).circuits().empty());
        }
        // Prescribing U_{2,m} on a block makes the restriction exactly that.
        const Matroid u23 = Matroid::uniform(2, 3);
        const Matroid deg = degenerate_with_blocks({corpus::order3()}, {u23, u23, u23});
        for (int b = 0; b < 3; ++b) {
            SetMask block = 0;
            for (int i = 1; i <= 3; ++i) block |= SetMask(1) << (3 * b + i - 1);
            CHECK(deg.restriction(block) == u23);
        }
    }
    SUBCASE("X point sets of orthogonal squares meet pairwise in one point") {
        const auto squares = std::vector<LatinSquare>{corpus::mols3_first(),
                                                      corpus::mols3_second()};
        const int m = 3;
        std::vector<SetMask> xs;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                SetMask x = mask_of({i, m + j});
                for (std::size_t p = 0; p < squares.size(); ++p)
                    x |= SetMask(1)
                         << ((static_cast<int>(p) + 2) * m + squares[p].at(i, j) - 1);
                xs.push_back(x);
            }
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b)
                CHECK(set_size(xs[a] & xs[b]) == 1);
    }
}

TEST_CASE("main classes correspond to matroid isomorphism classes") {
    std::mt19937_64 rng(37);
    // Same main class => isomorphic matroids (a paratopy acts by relabeling
    // the ground set).
    for (const auto& base : {corpus::order3(), corpus::order4_klein()}) {
        const LatinSquare moved =
            conjugate(corpus::random_isotopy(base, rng), corpus::random_sigma(rng));
        CHECK(build_matroid(base.as_hypercube())
                  .isomorphism(build_matroid(moved.as_hypercube()))
                  .has_value());
    }
    // Different main classes => non-isomorphic matroids, orders 4 and 5.
    const auto reps4 = main_class_representatives(4);
    CHECK_FALSE(build_matroid(reps4[0].as_hypercube())
                    .isomorphism(build_matroid(reps4[1].as_hypercube()))
                    .has_value());
    const auto reps5 = main_class_representatives(5);
    CHECK_FALSE(build_matroid(reps5[0].as_hypercube())
                    .isomorphism(build_matroid(reps5[1].as_hypercube()))
                    .has_value());
}

TEST_CASE("degenerations of the order-4 section") {
    const auto k1 = corpus::order4_cyclic();
    const Subsquare j{{1, 3}, {2, 4}, {2, 4}};

    const Matroid mkj = degenerate_with_subsquare(k1, j);
    CHECK(mkj.rank() == 3);
    CHECK(mkj.is_simple());
    // Degeneration: the 3-circuits contain C[K1].
    for (SetMask c : circuit_family(k1.as_hypercube()).members)
        CHECK(mkj.is_dependent_set(c));

    // Block matroid M_1 on [4] with single 3-circuit (1,2,4).
    const Matroid m1 = Matroid::from_circuits(4, {mask_of({1, 2, 4})});
    DegenerationSpec spec;
    spec.blocks.emplace_back(1, m1);
    spec.subsquare = j;
    const Matroid combined = build_matroid_degenerate({k1}, spec);
    CHECK(combined.is_simple());
    CHECK(combined.is_dependent_set(mask_of({1, 2, 4})));
    CHECK(combined.is_dependent_set(mask_of({1, 3, 6})));

    // A block circuit meeting X(J) in two points breaks the condition.
    DegenerationSpec bad;
    bad.blocks.emplace_back(1, Matroid::from_circuits(4, {mask_of({1, 2, 3})}));
    bad.subsquare = j;
    CHECK_THROWS_AS(build_matroid_degenerate({k1}, bad), std::invalid_argument);
}
