#pragma once

#include <json.hpp>
#include <string>

#include "osres/cohomology.hpp"
#include "osres/latin.hpp"
#include "osres/matroid.hpp"
#include "osres/realization.hpp"

// JSON formats (see docs/formats.md):
//   hypercube/square: { "dim": int, "order": int, "cells": [int, ...] }
//   matroid:          { "n": int, "rank": int, "circuits": [[int,...],...] }
//                     1-based elements, circuits sorted lexicographically
//   weight:           ["p/q", ...]
//   report:           { "dims_A": [...], "dims_dA": [...]|null,
//                       "weight": [...], "trivial_weight": bool }
//   configuration:    { "field": "Q" | {"cyclotomic": n}, "rank": r,
//                       "vectors": [[scalar, ...], ...] } where a rational
//                     scalar is "p/q" and a cyclotomic scalar is the array
//                     of its "p/q" coefficients modulo Phi_n.
namespace osres::io {

using nlohmann::json;

json to_json(const LatinHypercube& k);
LatinHypercube hypercube_from_json(const json& j);
LatinSquare square_from_json(const json& j);

json to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

json to_json(const WeightQ& w);
// Comma-separated rationals, e.g. "1,1/2,-3".
WeightQ weight_from_string(const std::string& s);

json to_json(const CohomologyReportQ& r);

json to_json(const AnyConfiguration& c);
AnyConfiguration configuration_from_json(const json& j);

json to_json(const VerifyReport& r);

json load_file(const std::string& path);

}  // namespace osres::io
