#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "osres/cohomology.hpp"
#include "osres/exterior.hpp"
#include "osres/latin.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace osres;

namespace {

ExteriorQ e(int n, std::initializer_list<int> elems) {
    return ExteriorQ::monomial(n, mask_of(elems), Rational(1));
}

ExteriorQ block_sum(int n, int m, int s) {
    ExteriorQ a(n);
    for (int i = 1; i <= m; ++i) a.add_term(SetMask(1) << ((s - 1) * m + i - 1), Rational(1));
    return a;
}

}  // namespace

TEST_CASE("wedge basics") {
    const int n = 6;
    CHECK(wedge(e(n, {1}), e(n, {1})).is_zero());
    CHECK(wedge(e(n, {2}), e(n, {1})) == -wedge(e(n, {1}), e(n, {2})));
    CHECK(wedge(e(n, {1}) + e(n, {2}), e(n, {3})) == e(n, {1, 3}) + e(n, {2, 3}));
    CHECK_THROWS_AS(wedge(e(4, {1}), e(5, {1})), std::invalid_argument);
}

TEST_CASE("boundary basics") {
    const int n = 6;
    CHECK(boundary(e(n, {1, 2})) == e(n, {2}) - e(n, {1}));
    CHECK(boundary(boundary(e(n, {1, 2, 3}))).is_zero());
    CHECK(boundary(ExteriorQ::unit(n)).is_zero());
    CHECK(boundary(e(n, {4})) == ExteriorQ::unit(n));
}

TEST_CASE("boundary of the full block product, m=2") {
    // d(a1^a2^a3) = 2 * sum of d(e_S) over the four triples of C[K].
    const int n = 6;
    const ExteriorQ prod =
        wedge(wedge(block_sum(n, 2, 1), block_sum(n, 2, 2)), block_sum(n, 2, 3));
    ExteriorQ rhs(n);
    for (auto t : {std::initializer_list<int>{1, 3, 5},
                   {1, 4, 6},
                   {2, 3, 6},
                   {2, 4, 5}})
        rhs += boundary(e(n, t));
    CHECK(boundary(prod) == Rational(2) * rhs);
}

TEST_CASE("graded structure and algebra laws on random elements") {
    std::mt19937_64 rng(20240812);
    const int n = 7;
    for (int trial = 0; trial < 100; ++trial) {
        const ExteriorQ x = oracle::random_element(n, 4, rng);
        const ExteriorQ y = oracle::random_element(n, 4, rng);
        const ExteriorQ z = oracle::random_element(n, 4, rng);
        CHECK(boundary(boundary(x)).is_zero());
        CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
    // Graded commutativity and the Leibniz rule on homogeneous elements.
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int trial = 0; trial < 10; ++trial) {
                const ExteriorQ x = oracle::random_homogeneous(n, p, rng);
                const ExteriorQ y = oracle::random_homogeneous(n, q, rng);
                const ExteriorQ xy = wedge(x, y);
                CHECK(xy == (((p * q) % 2) ? -wedge(y, x) : wedge(y, x)));
                const ExteriorQ leibniz =
                    wedge(boundary(x), y) + ((p % 2) ? -wedge(x, boundary(y))
                                                     : wedge(x, boundary(y)));
                CHECK(boundary(xy) == leibniz);
            }
}

TEST_CASE("decomposable relation holds across the corpus") {
    for (const auto& k : corpus::lemma_corpus()) CHECK(decomposable_relation_check(k));
}

TEST_CASE("decomposable relation fails for a non-Latin array") {
    LatinHypercube bad{2, 2, {1, 2, 1, 2}};
    CHECK_THROWS_AS(decomposable_relation_check(bad), std::invalid_argument);
}

TEST_CASE("the explicit order-2 relation, term for term") {
    // (e1+e2-e5-e6) ^ (e3+e4-e5-e6) =
    //   d(e1e3e5) + d(e1e4e6) + d(e2e3e6) + d(e2e4e5)
    const int n = 6;
    auto sum = [&](std::initializer_list<int> elems) {
        ExteriorQ x(n);
        for (int i : elems) x += e(n, {i});
        return x;
    };
    const ExteriorQ lhs =
        wedge(sum({1, 2}) - sum({5, 6}), sum({3, 4}) - sum({5, 6}));
    const ExteriorQ rhs = boundary(e(n, {1, 3, 5})) + boundary(e(n, {1, 4, 6})) +
                          boundary(e(n, {2, 3, 6})) + boundary(e(n, {2, 4, 5}));
    CHECK(lhs == rhs);
}
