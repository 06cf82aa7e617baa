// Command-line front end: build matroids from Latin square/hypercube files,
// compute cohomology reports, classify Latin squares, and run catalog
// verification. Machine-first JSON on stdout; --pretty indents it and adds
// a human summary on stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "osres/cohomology.hpp"
#include "osres/io.hpp"
#include "osres/realization.hpp"

using nlohmann::json;
using namespace osres;

namespace {

struct CommonFlags {
    std::string output;
    bool pretty = false;
};

void emit(const json& j, const CommonFlags& flags) {
    const std::string text = flags.pretty ? j.dump(2) : j.dump();
    if (flags.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(flags.output);
        if (!out) throw std::invalid_argument("cannot write file: " + flags.output);
        out << text << "\n";
    }
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("-o,--output", flags.output, "write JSON to a file instead of stdout");
    cmd->add_flag("--pretty", flags.pretty, "indent JSON and print a human summary to stderr");
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string tok;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (tok.empty()) throw std::invalid_argument("malformed integer list");
            out.push_back(std::stoi(tok));
            tok.clear();
        } else {
            tok += ch;
        }
    }
    return out;
}

// "rows=1,3;cols=2,4"
Subsquare parse_subsquare(const std::string& s, const LatinSquare& k) {
    std::vector<int> rows, cols;
    std::string part;
    for (char ch : s + ";") {
        if (ch != ';') {
            part += ch;
            continue;
        }
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed subsquare spec");
        const std::string key = part.substr(0, eq);
        if (key == "rows")
            rows = parse_int_list(part.substr(eq + 1));
        else if (key == "cols")
            cols = parse_int_list(part.substr(eq + 1));
        else
            throw std::invalid_argument("malformed subsquare spec");
        part.clear();
    }
    if (rows.empty() || cols.empty()) throw std::invalid_argument("malformed subsquare spec");
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    Subsquare sub{rows, cols, {}};
    const SetMask x = subsquare_point_set(k, sub);  // validates the block
    for (int e : elements_of(x))
        if (e > 2 * k.order) sub.symbols.push_back(e - 2 * k.order);
    return sub;
}

int run_latin_classify(int order, const CommonFlags& flags) {
    const auto reps = main_class_representatives(order);
    json out{{"order", order}, {"main_classes", reps.size()}};
    json list = json::array();
    for (const auto& rep : reps) list.push_back(io::to_json(rep.as_hypercube()));
    out["representatives"] = list;
    emit(out, flags);
    if (flags.pretty) {
        std::cerr << "order " << order << ": " << reps.size() << " main classes\n";
        for (const auto& rep : reps) {
            for (int i = 1; i <= order; ++i) {
                std::cerr << "  ";
                for (int j = 1; j <= order; ++j) std::cerr << rep.at(i, j) << " ";
                std::cerr << "\n";
            }
            std::cerr << "\n";
        }
    }
    return 0;
}

int run_matroid_build(const std::string& square_path, const std::vector<std::string>& mols_paths,
                      const std::vector<std::string>& block_specs,
                      const std::string& subsquare_spec, const CommonFlags& flags) {
    const LatinHypercube k = io::hypercube_from_json(io::load_file(square_path));
    Matroid m;
    if (k.dim != 2) {
        if (!mols_paths.empty() || !block_specs.empty() || !subsquare_spec.empty())
            throw std::invalid_argument(
                "mols/block/subsquare degenerations apply to squares (dim 2) only");
        m = build_matroid(k);
    } else {
        std::vector<LatinSquare> squares{LatinSquare::from_hypercube(k)};
        for (const auto& path : mols_paths)
            squares.push_back(io::square_from_json(io::load_file(path)));
        DegenerationSpec spec;
        for (const auto& bs : block_specs) {
            const auto eq = bs.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("block spec must be INDEX=FILE");
            spec.blocks.emplace_back(std::stoi(bs.substr(0, eq)),
                                     io::matroid_from_json(io::load_file(bs.substr(eq + 1))));
        }
        if (!subsquare_spec.empty())
            spec.subsquare = parse_subsquare(subsquare_spec, squares.front());
        m = build_matroid_degenerate(squares, spec);
    }
    emit(io::to_json(m), flags);
    if (flags.pretty)
        std::cerr << "matroid: n=" << m.ground_size() << " rank=" << m.rank()
                  << " circuits=" << m.circuits().size() << "\n";
    return 0;
}

int run_cohomology(const std::string& matroid_path, const std::string& weight_csv,
                   const std::string& block_csv, int order, const CommonFlags& flags) {
    const Matroid m = io::matroid_from_json(io::load_file(matroid_path));
    WeightQ w;
    if (!weight_csv.empty()) {
        w = io::weight_from_string(weight_csv);
    } else if (!block_csv.empty()) {
        if (order <= 0) throw std::invalid_argument("--block-weight requires --order");
        w = WeightQ::blocks(order, io::weight_from_string(block_csv).values);
    } else {
        throw std::invalid_argument("need --weight or --block-weight");
    }
    const auto report = cohomology(OSAlgebraQ(m), w);
    emit(io::to_json(report), flags);
    if (flags.pretty) {
        std::cerr << "dim H^p(A, e_lambda):";
        for (std::size_t p = 0; p < report.dims_A.size(); ++p)
            std::cerr << "  p=" << p << ": " << report.dims_A[p];
        std::cerr << "\n";
        if (report.dims_dA) {
            std::cerr << "dim H^p(dA, e_lambda):";
            for (std::size_t p = 0; p < report.dims_dA->size(); ++p)
                std::cerr << "  p=" << p << ": " << (*report.dims_dA)[p];
            std::cerr << "\n";
        }
    }
    return 0;
}

int run_verify(std::vector<std::string> entries, bool all, const CommonFlags& flags) {
    if (all) entries = catalog_names();
    if (entries.empty()) throw std::invalid_argument("need --entry NAME or --all");
    json out = json::array();
    bool ok = true;
    for (const auto& name : entries) {
        const auto report = verify(catalog(name));
        out.push_back(io::to_json(report));
        ok = ok && report.passed();
        if (flags.pretty)
            std::cerr << (report.passed() ? "PASS " : "FAIL ") << name
                      << (report.detail.empty() ? "" : "  (" + report.detail + ")") << "\n";
    }
    emit(out, flags);
    return ok ? 0 : 1;
}

int run_catalog_list(const CommonFlags& flags) {
    json out = json::array();
    for (const auto& name : catalog_names()) {
        const auto entry = catalog(name);
        out.push_back(json{{"name", entry.name},
                           {"description", entry.description},
                           {"degree", entry.degree},
                           {"expected_dim", entry.expected_dim},
                           {"dim_is_exact", entry.dim_is_exact}});
    }
    emit(out, flags);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latin squares, Orlik-Solomon cohomology and arrangement realizations"};
    app.require_subcommand(1);

    int order = 0;
    CommonFlags classify_flags;
    auto* classify = app.add_subcommand("latin-classify",
                                        "count main classes and print one representative each");
    classify->add_option("--order", order, "square order (1..6)")->required();
    add_common(classify, classify_flags);

    std::string square_path, subsquare_spec;
    std::vector<std::string> mols_paths, block_specs;
    CommonFlags build_flags;
    auto* build = app.add_subcommand("matroid-build",
                                     "build the matroid of a Latin square or hypercube file");
    build->add_option("--square", square_path, "square/hypercube JSON file")->required();
    build->add_option("--mols", mols_paths, "additional mutually orthogonal squares");
    build->add_option("--block,--blocks", block_specs,
                      "block degeneration INDEX=FILE (simple matroid JSON on [m])");
    build->add_option("--subsquare", subsquare_spec,
                      "subsquare degeneration, e.g. \"rows=1,3;cols=2,4\"");
    add_common(build, build_flags);

    std::string matroid_path, weight_csv, block_csv;
    int weight_order = 0;
    CommonFlags cohom_flags;
    auto* cohom = app.add_subcommand("cohomology", "cohomology report of (A(M), e_lambda)");
    cohom->add_option("--matroid", matroid_path, "matroid JSON file")->required();
    cohom->add_option("--weight", weight_csv, "comma-separated rationals, one per element");
    cohom->add_option("--block-weight", block_csv, "block values, expanded --order times each");
    cohom->add_option("--order", weight_order, "block size for --block-weight");
    add_common(cohom, cohom_flags);

    std::vector<std::string> entries;
    bool verify_all = false;
    CommonFlags verify_flags;
    auto* ver = app.add_subcommand("verify", "verify catalog realizations end to end");
    ver->add_option("--entry", entries, "catalog entry name (repeatable)");
    ver->add_flag("--all", verify_all, "verify every catalog entry");
    add_common(ver, verify_flags);

    CommonFlags list_flags;
    auto* list = app.add_subcommand("catalog-list", "list catalog entries");
    add_common(list, list_flags);

    try {
        app.parse(argc, argv);
        if (classify->parsed()) return run_latin_classify(order, classify_flags);
        if (build->parsed())
            return run_matroid_build(square_path, mols_paths, block_specs, subsquare_spec,
                                     build_flags);
        if (cohom->parsed())
            return run_cohomology(matroid_path, weight_csv, block_csv, weight_order, cohom_flags);
        if (ver->parsed()) return run_verify(entries, verify_all, verify_flags);
        if (list->parsed()) return run_catalog_list(list_flags);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
