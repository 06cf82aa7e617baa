#pragma once

#include <string>
#include <variant>
#include <vector>

#include "osres/cohomology.hpp"
#include "osres/matrix.hpp"
#include "osres/matroid.hpp"

namespace osres {

// A list of n linear forms of length r over an exact field: an arrangement
// presented by coordinates. Loopless (no zero form) and of full rank r.
template <class F>
struct Configuration {
    int rank = 0;
    std::vector<std::vector<F>> vectors;

    int size() const { return static_cast<int>(vectors.size()); }

    Matrix<F> matrix_of(SetMask s) const {
        const std::vector<int> elems = elements_of(s);
        Matrix<F> m(elems.size(), rank);
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (int j = 0; j < rank; ++j) m(i, j) = vectors[elems[i] - 1][j];
        return m;
    }

    void validate() const {
        using osres::is_zero;
        for (const auto& v : vectors) {
            if (static_cast<int>(v.size()) != rank)
                throw std::invalid_argument("form length differs from rank");
            bool zero = true;
            for (const F& x : v)
                if (!is_zero(x)) zero = false;
            if (zero) throw std::invalid_argument("loop");
        }
        SetMask all = vectors.size() >= 64 ? ~SetMask(0) : (SetMask(1) << vectors.size()) - 1;
        if (matrix_of(all).rank() != static_cast<std::size_t>(rank))
            throw std::invalid_argument("forms do not span rank-r space");
    }
};

using ConfigurationQ = Configuration<Rational>;
using ConfigurationC = Configuration<Cyclotomic>;
using AnyConfiguration = std::variant<ConfigurationQ, ConfigurationC>;

// Circuits = minimal linearly dependent subsets, by exact rank over the
// configuration's field; subset sizes 2..r+1 suffice in a rank-r space.
template <class F>
Matroid underlying_matroid(const Configuration<F>& c) {
    c.validate();
    const int n = c.size();
    std::vector<SetMask> circuits;
    for (int k = 2; k <= c.rank + 1; ++k) {
        for (SetMask s : all_subsets_of_size(n, k)) {
            bool minimal = true;
            for (SetMask known : circuits)
                if ((known & s) == known) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            if (c.matrix_of(s).rank() < static_cast<std::size_t>(k)) circuits.push_back(s);
        }
    }
    return Matroid::from_circuits(n, std::move(circuits));
}

Matroid underlying_matroid(const AnyConfiguration& c);

// One verified example from the realization catalog: exact coordinates, the
// matroid they are expected to realize, and the weight witnessing
// non-vanishing cohomology in the stated degree.
struct CatalogEntry {
    std::string name;
    std::string description;
    AnyConfiguration config;
    Matroid expected;
    bool compare_circuits_literally = false;  // exact circuit-family equality
    WeightQ weight;
    int degree = 1;
    int expected_dim = 1;
    bool dim_is_exact = true;  // otherwise a lower bound
    bool experimental = false;
};

// Entries: near-pencil, ceva, pappus, hessian, monomial(m), higher-A(b,c),
// higher-B, plus experimental extras. Unknown names throw.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

struct VerifyReport {
    std::string name;
    bool matroid_ok = false;
    bool cohomology_ok = false;
    bool vanishing_below_ok = false;  // H^k = 0 for 0 <= k < degree
    std::vector<int> dims_A;
    int circuit_count = 0;
    std::string detail;

    bool passed() const { return matroid_ok && cohomology_ok && vanishing_below_ok; }
};

// Computes the underlying matroid, compares it against the expected builder
// output, runs cohomology with the entry's weight and compares dimensions.
VerifyReport verify(const CatalogEntry& entry);

}  // namespace osres
