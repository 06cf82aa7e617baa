// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Every asserted value is exact (exact-field arithmetic throughout); the
// only tolerances are the stated wall-clock bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "osres/cohomology.hpp"
#include "osres/io.hpp"
#include "osres/realization.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace osres;

namespace {

struct Runner {
    int failures = 0;

    void run(int id, const std::string& label, const std::function<void(std::ostringstream&)>& fn) {
        std::ostringstream problems;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(problems);
        } catch (const std::exception& e) {
            problems << "exception: " << e.what() << "; ";
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = problems.str().empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << label << "  ("
                  << dt << " s)";
        if (!ok) std::cout << "  -- " << problems.str();
        std::cout << "\n" << std::flush;
    }
};

#define REQUIRE_MSG(cond, msg)                      \
    do {                                            \
        if (!(cond)) problems << msg << "; ";       \
    } while (0)

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    Runner r;

    r.run(1, "main-class counts 1,1,1,2,2,12 for m = 1..6 within time bounds",
          [&](std::ostringstream& problems) {
              const std::vector<int> expected{1, 1, 1, 2, 2, 12};
              const auto t_small = std::chrono::steady_clock::now();
              for (int m = 1; m <= 5; ++m)
                  REQUIRE_MSG(count_main_classes(m) == expected[m - 1],
                              "wrong count at m=" << m);
              const double small_time = seconds_since(t_small);
              REQUIRE_MSG(small_time < 10.0, "m <= 5 took " << small_time << " s (>= 10)");
              const auto t6 = std::chrono::steady_clock::now();
              REQUIRE_MSG(count_main_classes(6) == 12, "wrong count at m=6");
              const double t6_time = seconds_since(t6);
              REQUIRE_MSG(t6_time < 300.0, "m=6 took " << t6_time << " s (>= 300)");
          });

    r.run(2, "square matroids: H^0 = 0 and dim H^1 = 1 for random zero-sum block weights",
          [&](std::ostringstream& problems) {
              const auto t0 = std::chrono::steady_clock::now();
              std::mt19937_64 rng(424243);
              for (int m : {2, 3, 4}) {
                  for (const auto& rep : main_class_representatives(m)) {
                      const OSAlgebraQ alg(build_matroid(rep.as_hypercube()));
                      for (int trial = 0; trial < 10; ++trial) {
                          const WeightQ w = oracle::random_block_weight(m, 3, rng);
                          const auto report = cohomology(alg, w);
                          REQUIRE_MSG(report.dims_A[0] == 0, "H^0 != 0 at m=" << m);
                          REQUIRE_MSG(report.dims_A[1] == 1,
                                      "dim H^1 = " << report.dims_A[1] << " != 1 at m=" << m);
                      }
                  }
              }
              const double dt = seconds_since(t0);
              REQUIRE_MSG(dt < 30.0, "took " << dt << " s (>= 30)");
          });

    r.run(3, "cube matroids (l=3): H^0 = H^1 = 0 and H^2 != 0, exactly",
          [&](std::ostringstream& problems) {
              std::mt19937_64 rng(424244);
              const std::vector<LatinHypercube> cubes{corpus::cube2(),
                                                      corpus::additive_hypercube(3, 3),
                                                      corpus::twisted_cube3()};
              for (const auto& k : cubes) {
                  const OSAlgebraQ alg(build_matroid(k));
                  std::vector<WeightQ> weights{
                      WeightQ::blocks(k.order, {Rational(1), Rational(1), Rational(1),
                                                Rational(-3)}),
                      WeightQ::blocks(k.order, {Rational(1), Rational(-1), Rational(2),
                                                Rational(-2)})};
                  for (int trial = 0; trial < 2; ++trial)
                      weights.push_back(oracle::random_block_weight(k.order, 4, rng));
                  for (const auto& w : weights) {
                      const auto report = cohomology(alg, w);
                      REQUIRE_MSG(report.dims_A[0] == 0, "H^0 != 0 (order " << k.order << ")");
                      REQUIRE_MSG(report.dims_A[1] == 0, "H^1 != 0 (order " << k.order << ")");
                      REQUIRE_MSG(report.dims_A[2] >= 1, "H^2 = 0 (order " << k.order << ")");
                  }
              }
          });

    r.run(4, "dim H^1 = s for MOLS: (m,s) = (3,2), (5,2), (5,4)",
          [&](std::ostringstream& problems) {
              const WeightQ w4 = WeightQ::blocks(
                  3, {Rational(1), Rational(1), Rational(1), Rational(-3)});
              REQUIRE_MSG(
                  h1_dimension_mols({corpus::mols3_first(), corpus::mols3_second()}, w4) == 2,
                  "(3,2) != 2");
              const auto five = mols_prime(5, 4);
              const WeightQ w5_2 = WeightQ::blocks(
                  5, {Rational(1), Rational(1), Rational(1), Rational(-3)});
              REQUIRE_MSG(h1_dimension_mols({five[0], five[1]}, w5_2) == 2, "(5,2) != 2");
              const WeightQ w5_4 = WeightQ::blocks(
                  5, {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1),
                      Rational(-5)});
              REQUIRE_MSG(h1_dimension_mols(five, w5_4) == 4, "(5,4) != 4");
          });

    r.run(5, "decomposable relation across the corpus; explicit m=2 relation term-for-term",
          [&](std::ostringstream& problems) {
              for (const auto& k : corpus::lemma_corpus())
                  REQUIRE_MSG(decomposable_relation_check(k),
                              "relation fails (dim " << k.dim << ", order " << k.order << ")");
              // (e1+e2-e5-e6) ^ (e3+e4-e5-e6) = sum of d(e_S) over C[K].
              const int n = 6;
              auto gen = [&](int i) { return ExteriorQ::generator(n, i); };
              const ExteriorQ lhs = wedge(gen(1) + gen(2) - gen(5) - gen(6),
                                          gen(3) + gen(4) - gen(5) - gen(6));
              ExteriorQ rhs(n);
              for (auto t : std::vector<std::vector<int>>{{1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                                                          {2, 4, 5}})
                  rhs += boundary(ExteriorQ::monomial(n, mask_of(t), Rational(1)));
              REQUIRE_MSG(lhs == rhs, "explicit order-2 relation differs");
          });

    r.run(6, "nonzero-sum vanishing, splitting identity, trivial-weight Betti numbers",
          [&](std::ostringstream& problems) {
              std::mt19937_64 rng(424245);
              const std::vector<Matroid> matroids{
                  build_matroid(corpus::order2().as_hypercube()),
                  build_matroid(corpus::order3().as_hypercube()),
                  build_matroid(corpus::order4_cyclic().as_hypercube()),
                  build_matroid(corpus::cube2()),
                  build_matroid_mols({corpus::mols3_first(), corpus::mols3_second()})};
              for (const auto& m : matroids) {
                  const OSAlgebraQ alg(m);
                  for (int trial = 0; trial < 20; ++trial) {
                      const auto rep = cohomology(
                          alg, oracle::random_weight_sum_nonzero(m.ground_size(), rng));
                      for (int d : rep.dims_A)
                          REQUIRE_MSG(d == 0, "nonzero-sum weight has cohomology (n="
                                                  << m.ground_size() << ")");
                  }
                  for (int trial = 0; trial < 5; ++trial) {
                      const WeightQ w = oracle::random_weight_sum_zero(m.ground_size(), rng);
                      const auto rep = cohomology(alg, w);  // throws if splitting fails
                      REQUIRE_MSG(rep.dims_dA.has_value(), "dA complex missing");
                      const auto& da = *rep.dims_dA;
                      for (int p = 0; p + 1 <= m.rank(); ++p) {
                          const int upper = p + 1 < m.rank() ? da[p + 1] : 0;
                          REQUIRE_MSG(rep.dims_A[p + 1] == upper + da[p],
                                      "splitting fails at p=" << p);
                      }
                  }
                  const auto betti =
                      cohomology(alg, WeightQ(std::vector<Rational>(m.ground_size(), Rational(0))));
                  REQUIRE_MSG(betti.trivial_weight, "zero weight not flagged");
                  for (int p = 0; p <= m.rank(); ++p)
                      REQUIRE_MSG(betti.dims_A[p] == alg.dimension(p),
                                  "trivial weight does not give Betti numbers");
              }
          });

    r.run(7, "nbc dimensions equal quotient ranks (n <= 9); circuit axioms exhaustive (n <= 12)",
          [&](std::ostringstream& problems) {
              std::vector<Matroid> small{build_matroid(corpus::order2().as_hypercube()),
                                         build_matroid(corpus::order3().as_hypercube()),
                                         build_matroid(corpus::cube2()),
                                         Matroid::uniform(3, 6),
                                         underlying_matroid(catalog("pappus").config),
                                         underlying_matroid(catalog("higher-B").config)};
              for (const auto& m : small) {
                  if (m.ground_size() > 9) continue;
                  const OSAlgebraQ alg(m);
                  for (int p = 0; p <= m.rank(); ++p)
                      REQUIRE_MSG(alg.dimension(p) == oracle::quotient_dimension(m, p),
                                  "dim A^" << p << " mismatch (n=" << m.ground_size() << ")");
              }
              std::vector<Matroid> axioms = small;
              axioms.push_back(build_matroid(corpus::order4_cyclic().as_hypercube()));
              axioms.push_back(build_matroid(corpus::order4_klein().as_hypercube()));
              axioms.push_back(
                  build_matroid_mols({corpus::mols3_first(), corpus::mols3_second()}));
              axioms.push_back(degenerate_with_subsquare(corpus::order4_cyclic(),
                                                         Subsquare{{1, 3}, {2, 4}, {2, 4}}));
              for (const auto& m : axioms) {
                  if (m.ground_size() > 12) continue;
                  const auto violation = circuit_axiom_violation(m);
                  REQUIRE_MSG(!violation.has_value(),
                              "axiom violation (n=" << m.ground_size() << "): " << *violation);
              }
          });

    r.run(8, "realization catalog verifies end to end",
          [&](std::ostringstream& problems) {
              const auto t0 = std::chrono::steady_clock::now();
              for (const char* name : {"ceva", "pappus", "hessian", "monomial(3)", "monomial(4)",
                                       "higher-A(2,3)", "higher-B"}) {
                  const auto report = verify(catalog(name));
                  REQUIRE_MSG(report.passed(), name << " failed: " << report.detail);
                  if (std::string(name) == "hessian")
                      REQUIRE_MSG(report.dims_A[1] == 2, "hessian dim H^1 != 2");
              }
              const double dt = seconds_since(t0);
              REQUIRE_MSG(dt < 120.0, "took " << dt << " s (>= 120)");
          });

    r.run(9, "order-4 degenerations build and keep dim H^1 = 1",
          [&](std::ostringstream& problems) {
              const auto k1 = corpus::order4_cyclic();
              const Subsquare j{{1, 3}, {2, 4}, {2, 4}};
              REQUIRE_MSG(subsquare_point_set(k1, j) == mask_of({1, 3, 6, 8, 10, 12}),
                          "X(J) differs");
              const WeightQ w = WeightQ::blocks(
                  4, {Rational(1), Rational(1), Rational(-2)});

              const Matroid mkj = degenerate_with_subsquare(k1, j);
              const auto rep1 = cohomology(OSAlgebraQ(mkj), w);
              REQUIRE_MSG(rep1.dims_A[1] == 1, "M[K1;J]: dim H^1 = " << rep1.dims_A[1]);

              DegenerationSpec spec;
              spec.blocks.emplace_back(1, Matroid::from_circuits(4, {mask_of({1, 2, 4})}));
              spec.subsquare = j;
              const Matroid combined = build_matroid_degenerate({k1}, spec);
              const auto rep2 = cohomology(OSAlgebraQ(combined), w);
              REQUIRE_MSG(rep2.dims_A[1] == 1, "M[K1:M1;J]: dim H^1 = " << rep2.dims_A[1]);

              DegenerationSpec blocks_only;
              blocks_only.blocks.emplace_back(1,
                                              Matroid::from_circuits(4, {mask_of({1, 2, 4})}));
              const Matroid mkm = build_matroid_degenerate({k1}, blocks_only);
              const auto rep3 = cohomology(OSAlgebraQ(mkm), w);
              REQUIRE_MSG(rep3.dims_A[1] == 1, "M[K1;M1]: dim H^1 = " << rep3.dims_A[1]);
          });

    if (r.failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << r.failures << " acceptance criteria FAILED\n";
    return r.failures;
}
