#include "osres/realization.hpp"

#include <sstream>

namespace osres {

Matroid underlying_matroid(const AnyConfiguration& c) {
    return std::visit([](const auto& cfg) { return underlying_matroid(cfg); }, c);
}

VerifyReport verify(const CatalogEntry& entry) {
    VerifyReport report;
    report.name = entry.name;

    const Matroid got = underlying_matroid(entry.config);
    report.circuit_count = static_cast<int>(got.circuits().size());
    std::ostringstream detail;

    if (entry.compare_circuits_literally) {
        report.matroid_ok = got == entry.expected;
        if (!report.matroid_ok) detail << "circuit family differs from the expected one; ";
    } else {
        report.matroid_ok = got.isomorphism(entry.expected).has_value();
        if (!report.matroid_ok) detail << "matroid not isomorphic to the expected one; ";
    }

    const auto rep = cohomology(OSAlgebraQ(got), entry.weight);
    report.dims_A = rep.dims_A;
    const int computed = rep.dims_A.at(entry.degree);
    report.cohomology_ok =
        entry.dim_is_exact ? computed == entry.expected_dim : computed >= entry.expected_dim;
    if (!report.cohomology_ok)
        detail << "dim H^" << entry.degree << " = " << computed << ", expected "
               << (entry.dim_is_exact ? "" : ">= ") << entry.expected_dim << "; ";

    report.vanishing_below_ok = true;
    for (int k = 0; k < entry.degree; ++k)
        if (rep.dims_A.at(k) != 0) {
            report.vanishing_below_ok = false;
            detail << "H^" << k << " != 0; ";
        }

    report.detail = detail.str();
    return report;
}

}  // namespace osres
