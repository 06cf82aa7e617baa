#include "osres/io.hpp"

#include <algorithm>
#include <fstream>

namespace osres::io {

namespace {

json require(const json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
    return j.at(key);
}

}  // namespace

json to_json(const LatinHypercube& k) {
    return json{{"dim", k.dim}, {"order", k.order}, {"cells", k.cells}};
}

LatinHypercube hypercube_from_json(const json& j) {
    LatinHypercube k;
    k.dim = require(j, "dim").get<int>();
    k.order = require(j, "order").get<int>();
    k.cells = require(j, "cells").get<std::vector<int>>();
    k.validate();
    return k;
}

LatinSquare square_from_json(const json& j) {
    return LatinSquare::from_hypercube(hypercube_from_json(j));
}

json to_json(const Matroid& m) {
    std::vector<std::vector<int>> circuits;
    circuits.reserve(m.circuits().size());
    for (SetMask c : m.circuits()) circuits.push_back(elements_of(c));
    std::sort(circuits.begin(), circuits.end());
    return json{{"n", m.ground_size()}, {"rank", m.rank()}, {"circuits", circuits}};
}

Matroid matroid_from_json(const json& j) {
    const int n = require(j, "n").get<int>();
    if (n < 0 || n > 64) throw std::invalid_argument("ground set too large");
    std::vector<SetMask> circuits;
    for (const auto& c : require(j, "circuits")) {
        const auto elems = c.get<std::vector<int>>();
        for (int e : elems)
            if (e < 1 || e > n) throw std::invalid_argument("circuit element out of range");
        circuits.push_back(mask_of(elems));
    }
    Matroid m = Matroid::from_circuits(n, std::move(circuits));
    if (j.contains("rank") && j.at("rank").get<int>() != m.rank())
        throw std::invalid_argument("stored rank disagrees with circuits");
    return m;
}

json to_json(const WeightQ& w) {
    json out = json::array();
    for (const auto& v : w.values) out.push_back(v.str());
    return out;
}

WeightQ weight_from_string(const std::string& s) {
    WeightQ w;
    std::string token;
    auto flush = [&] {
        const auto from = token.find_first_not_of(" \t");
        if (from == std::string::npos) throw std::invalid_argument("malformed weight string");
        const auto to = token.find_last_not_of(" \t");
        w.values.push_back(Rational::from_string(token.substr(from, to - from + 1)));
        token.clear();
    };
    for (char ch : s) {
        if (ch == ',')
            flush();
        else
            token += ch;
    }
    flush();
    return w;
}

json to_json(const CohomologyReportQ& r) {
    json out{{"dims_A", r.dims_A},
             {"dims_dA", nullptr},
             {"weight", to_json(r.weight)},
             {"trivial_weight", r.trivial_weight}};
    if (r.dims_dA) out["dims_dA"] = *r.dims_dA;
    return out;
}

namespace {

json scalar_to_json(const Rational& r) { return r.str(); }

}  // namespace

json to_json(const AnyConfiguration& c) {
    if (const auto* q = std::get_if<ConfigurationQ>(&c)) {
        json vectors = json::array();
        for (const auto& v : q->vectors) {
            json row = json::array();
            for (const auto& x : v) row.push_back(scalar_to_json(x));
            vectors.push_back(row);
        }
        return json{{"field", "Q"}, {"rank", q->rank}, {"vectors", vectors}};
    }
    const auto& cc = std::get<ConfigurationC>(c);
    int conductor = 1;
    for (const auto& v : cc.vectors)
        for (const auto& x : v) conductor = std::max(conductor, x.conductor());
    json vectors = json::array();
    for (const auto& v : cc.vectors) {
        json row = json::array();
        for (const auto& x : v) {
            // Promote rational constants so every scalar serializes with
            // deg Phi_n coefficients.
            const Cyclotomic promoted =
                x.conductor() == conductor ? x
                                           : Cyclotomic::from_rational(x.rational_value(),
                                                                       conductor);
            json coeffs = json::array();
            for (const auto& co : promoted.coeffs()) coeffs.push_back(co.str());
            row.push_back(coeffs);
        }
        vectors.push_back(row);
    }
    return json{{"field", json{{"cyclotomic", conductor}}}, {"rank", cc.rank},
                {"vectors", vectors}};
}

AnyConfiguration configuration_from_json(const json& j) {
    const json field = require(j, "field");
    const int rank = require(j, "rank").get<int>();
    const json vectors = require(j, "vectors");
    if (field.is_string() && field.get<std::string>() == "Q") {
        ConfigurationQ c;
        c.rank = rank;
        for (const auto& row : vectors) {
            std::vector<Rational> v;
            for (const auto& x : row) v.push_back(Rational::from_string(x.get<std::string>()));
            c.vectors.push_back(std::move(v));
        }
        c.validate();
        return c;
    }
    if (field.is_object() && field.contains("cyclotomic")) {
        const int conductor = field.at("cyclotomic").get<int>();
        ConfigurationC c;
        c.rank = rank;
        for (const auto& row : vectors) {
            std::vector<Cyclotomic> v;
            for (const auto& x : row) {
                std::vector<Rational> coeffs;
                for (const auto& s : x) coeffs.push_back(Rational::from_string(s.get<std::string>()));
                v.push_back(Cyclotomic(conductor, std::move(coeffs)));
            }
            c.vectors.push_back(std::move(v));
        }
        c.validate();
        return c;
    }
    throw std::invalid_argument("unknown field tag");
}

json to_json(const VerifyReport& r) {
    return json{{"name", r.name},
                {"passed", r.passed()},
                {"matroid_ok", r.matroid_ok},
                {"cohomology_ok", r.cohomology_ok},
                {"vanishing_below_ok", r.vanishing_below_ok},
                {"dims_A", r.dims_A},
                {"circuit_count", r.circuit_count},
                {"detail", r.detail}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace osres::io
