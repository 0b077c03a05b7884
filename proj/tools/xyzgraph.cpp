// Command-line front end: build xyz-transformations of regular graphs, query
// their Laplacian spectra and spanning-tree counts from the closed-form
// catalog, and verify the catalog against direct computation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xyz/eigen.hpp"
#include "xyz/formulas.hpp"
#include "xyz/matrix.hpp"
#include "xyz/verify.hpp"

using namespace xyz;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;

struct CliConfig {
    std::string gen;
    std::string in_path;
    std::string code;
    std::string codes;
    std::string format = "pretty";
    std::string out_path;
    std::string series;
    std::string graphs;
    double tol = 1e-8;
    bool check = false;
};

struct cli_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cli_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Graph load_graph(const CliConfig& cfg) {
    if (!cfg.gen.empty() && !cfg.in_path.empty())
        throw cli_parse_error("give either --gen or --in, not both");
    if (!cfg.gen.empty()) {
        try {
            return generate(cfg.gen);
        } catch (const graph_parse_error& e) {
            throw cli_parse_error(e.what());
        }
    }
    if (!cfg.in_path.empty()) {
        std::ifstream f(cfg.in_path);
        if (!f) throw cli_parse_error("cannot open '" + cfg.in_path + "'");
        try {
            return read_edge_list(f);
        } catch (const graph_parse_error& e) {
            throw cli_parse_error(e.what());
        }
    }
    throw cli_parse_error("an input graph is required (--gen or --in)");
}

RegularGraph load_regular(const CliConfig& cfg) {
    const Graph g = load_graph(cfg);
    try {
        return as_regular(g);
    } catch (const std::exception& e) {
        throw cli_domain_error(e.what());
    }
}

XyzCode parse_code_cli(const std::string& s) {
    try {
        return XyzCode::parse(s);
    } catch (const code_parse_error& e) {
        throw cli_parse_error(e.what());
    }
}

std::vector<XyzCode> parse_codes_cli(const CliConfig& cfg) {
    if (cfg.codes.empty()) return all_codes();
    std::vector<XyzCode> out;
    std::istringstream is(cfg.codes);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(parse_code_cli(tok));
    return out;
}

std::ostream& open_out(const CliConfig& cfg, std::ofstream& file) {
    if (cfg.out_path.empty()) return std::cout;
    file.open(cfg.out_path);
    if (!file) throw cli_parse_error("cannot write '" + cfg.out_path + "'");
    return file;
}

std::string graph_display_id(const CliConfig& cfg) {
    return !cfg.gen.empty() ? cfg.gen : cfg.in_path;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["m"] = g.m();
    auto labels = nlohmann::json::array();
    for (const auto& l : g.labels()) labels.push_back(l.str());
    j["labels"] = labels;
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

int cmd_transform(const CliConfig& cfg) {
    const RegularGraph g = load_regular(cfg);
    const XyzCode code = parse_code_cli(cfg.code);
    const Graph built = xyz_transform(g, code);
    std::ofstream file;
    std::ostream& out = open_out(cfg, file);
    if (cfg.format == "json") {
        nlohmann::json j = graph_to_json(built);
        j["base"] = graph_display_id(cfg);
        j["code"] = code.str();
        out << j.dump(2) << "\n";
    } else {
        write_edge_list(out, built);
    }
    return 0;
}

int cmd_spectrum(const CliConfig& cfg) {
    const RegularGraph g = load_regular(cfg);
    const XyzCode code = parse_code_cli(cfg.code);
    const Spectrum sp_g = symmetric_eigenvalues(laplacian(g.graph));
    const PredictedSpectrum pred =
        predict_spectrum(registry(code), g.n(), g.m(), g.r, sp_g, cfg.tol);

    double dev = 0;
    Spectrum direct;
    if (cfg.check) {
        direct = symmetric_eigenvalues(laplacian(xyz_transform(g, code)));
        dev = max_pairwise_dev(pred.spectrum, direct);
    }

    std::ofstream file;
    std::ostream& out = open_out(cfg, file);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["graph"] = graph_display_id(cfg);
        j["code"] = code.str();
        j["predicted"] = pred.spectrum.values;
        if (cfg.check) {
            j["direct"] = direct.values;
            j["max_abs_dev"] = dev;
        }
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "index,predicted" << (cfg.check ? ",direct" : "") << "\n";
        for (size_t i = 0; i < pred.spectrum.values.size(); ++i) {
            out << i << "," << fmt12(pred.spectrum.values[i]);
            if (cfg.check) out << "," << fmt12(direct.values[i]);
            out << "\n";
        }
    } else {
        out << "spectrum of " << graph_display_id(cfg) << "^{" << code.str() << "} ("
            << pred.spectrum.size() << " values)\n";
        for (auto [value, mult] : pred.spectrum.clusters())
            out << "  " << fmt12(value) << (mult > 1 ? "  (x" + std::to_string(mult) + ")" : "")
                << "\n";
        if (cfg.check) {
            out << "max |predicted - direct| = " << fmt12(dev) << "\n";
            out << (dev <= cfg.tol ? "OK" : "DEVIATION EXCEEDS TOLERANCE") << "\n";
        }
    }
    return cfg.check && dev > cfg.tol ? kExitVerifyFail : 0;
}

int cmd_trees(const CliConfig& cfg) {
    const RegularGraph g = load_regular(cfg);
    const XyzCode code = parse_code_cli(cfg.code);
    const BigInt formula =
        eval_trees(registry(code), char_poly_exact(laplacian(g.graph)), g.n(), g.m(), g.r);
    const BigInt direct = matrix_tree_count(xyz_transform(g, code));
    const bool match = formula == direct;

    std::ofstream file;
    std::ostream& out = open_out(cfg, file);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["graph"] = graph_display_id(cfg);
        j["code"] = code.str();
        j["formula"] = formula.str();
        j["matrix_tree"] = direct.str();
        j["match"] = match;
        out << j.dump(2) << "\n";
    } else {
        out << "t(" << graph_display_id(cfg) << "^{" << code.str() << "})\n";
        out << "  formula:     " << formula.str() << "\n";
        out << "  matrix-tree: " << direct.str() << "\n";
        out << "  " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? 0 : kExitVerifyFail;
}

int cmd_table(const CliConfig& cfg) {
    const RegularGraph g = load_regular(cfg);
    const std::vector<XyzCode> codes = parse_codes_cli(cfg);
    const std::string id = graph_display_id(cfg);

    std::vector<VerificationReport> reports;
    std::vector<std::string> spectra;
    std::vector<std::string> trees;
    const IntPoly charpoly_g = char_poly_exact(laplacian(g.graph));
    const Spectrum sp_g = symmetric_eigenvalues(laplacian(g.graph));
    for (const XyzCode& code : codes) {
        reports.push_back(verify_code(g, code, cfg.tol, id));
        const auto pred = predict_spectrum(registry(code), g.n(), g.m(), g.r, sp_g, cfg.tol);
        std::ostringstream sp;
        for (auto [value, mult] : pred.spectrum.clusters()) {
            if (sp.tellp() > 0) sp << " ";
            sp << fmt12(value);
            if (mult > 1) sp << "^(" << mult << ")";
        }
        spectra.push_back(sp.str());
        trees.push_back(eval_trees(registry(code), charpoly_g, g.n(), g.m(), g.r).str());
    }

    std::ofstream file;
    std::ostream& out = open_out(cfg, file);
    bool all_pass = true;
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (size_t i = 0; i < codes.size(); ++i) {
            nlohmann::json j;
            j["code"] = codes[i].str();
            j["spectrum"] = spectra[i];
            j["trees"] = trees[i];
            j["verified"] = reports[i].pass(cfg.tol);
            arr.push_back(j);
            all_pass = all_pass && reports[i].pass(cfg.tol);
        }
        nlohmann::json j;
        j["graph"] = id;
        j["rows"] = arr;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "code,spectrum,trees,verified\n";
        for (size_t i = 0; i < codes.size(); ++i) {
            out << codes[i].str() << ",\"" << spectra[i] << "\"," << trees[i] << ","
                << (reports[i].pass(cfg.tol) ? "yes" : "no") << "\n";
            all_pass = all_pass && reports[i].pass(cfg.tol);
        }
    } else {
        out << "transformations of " << id << " (n=" << g.n() << ", m=" << g.m() << ", r=" << g.r
            << ")\n";
        for (size_t i = 0; i < codes.size(); ++i) {
            out << codes[i].str() << "  t=" << trees[i] << "  "
                << (reports[i].pass(cfg.tol) ? "pass" : "FAIL") << "\n";
            out << "     Sp = { " << spectra[i] << " }\n";
            all_pass = all_pass && reports[i].pass(cfg.tol);
        }
    }
    return all_pass ? 0 : kExitVerifyFail;
}

int cmd_verify(const CliConfig& cfg) {
    // operation-series mode: composed-spectrum formula vs explicit construction
    if (!cfg.series.empty()) {
        const RegularGraph g = load_regular(cfg);
        std::vector<SeriesOp> ops;
        try {
            ops = parse_series(cfg.series);
        } catch (const std::invalid_argument& e) {
            throw cli_parse_error(e.what());
        }
        SeriesState st{g.n(), g.r, symmetric_eigenvalues(laplacian(g.graph))};
        st = apply_operation_series(st, ops, cfg.tol);

        Graph composed = g.graph;
        for (SeriesOp op : ops) {
            switch (op) {
                case SeriesOp::Complement: composed = complement(composed); break;
                case SeriesOp::Line: composed = line_graph(composed); break;
                case SeriesOp::TotalPlus:
                    composed = xyz_transform(as_regular(composed), XyzCode::parse("+++"));
                    break;
                case SeriesOp::TotalMinus:
                    composed = xyz_transform(as_regular(composed), XyzCode::parse("---"));
                    break;
            }
        }
        const Spectrum direct = symmetric_eigenvalues(laplacian(composed));
        const double dev = max_pairwise_dev(st.sp, direct);
        std::cout << "series [" << cfg.series << "] on " << graph_display_id(cfg) << ": "
                  << st.n << " vertices, " << st.r << "-regular, max dev " << fmt12(dev) << " -> "
                  << (dev <= cfg.tol ? "pass" : "FAIL") << "\n";
        return dev <= cfg.tol ? 0 : kExitVerifyFail;
    }

    std::vector<VerificationReport> reports;
    bool aux_ok = true;
    std::vector<std::string> aux_notes;
    if (cfg.graphs.empty()) {
        CorpusSuiteResult full = run_corpus_full(cfg.tol);
        reports = std::move(full.reports);
        aux_ok = full.reciprocity_ok && full.lemmas_ok && full.cycle_isomorphism_ok;
        aux_notes = std::move(full.suite_notes);
    } else {
        std::vector<CorpusGraph> graphs;
        std::istringstream is(cfg.graphs);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                graphs.push_back({tok, as_regular(generate(tok))});
            } catch (const graph_parse_error& e) {
                throw cli_parse_error(e.what());
            } catch (const std::exception& e) {
                throw cli_domain_error(e.what());
            }
        }
        reports = run_codes(graphs, all_codes(), cfg.tol);
        for (const auto& cg : graphs) {
            if (!verify_reciprocity(cg.g.graph, cfg.tol)) {
                aux_notes.push_back("reciprocity failed on " + cg.id);
                aux_ok = false;
            }
            std::string why;
            if (!verify_lemma_suite(cg.g, &why)) {
                aux_notes.push_back("lemma suite failed on " + cg.id + ": " + why);
                aux_ok = false;
            }
        }
    }

    int pass = 0;
    for (const auto& rep : reports)
        if (rep.pass(cfg.tol)) ++pass;

    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path);
        if (!file) throw cli_parse_error("cannot write '" + cfg.out_path + "'");
        write_reports_jsonl(file, reports);
    }

    std::cout << pass << "/" << reports.size() << " code-graph cells pass\n";
    std::cout << "identity suites (reciprocity, incidence lemmas"
              << (cfg.graphs.empty() ? ", cycle isomorphisms" : "")
              << "): " << (aux_ok ? "pass" : "FAIL") << "\n";
    for (const auto& note : aux_notes) std::cout << "  " << note << "\n";
    if (pass != static_cast<int>(reports.size())) {
        for (const auto& rep : reports)
            if (!rep.pass(cfg.tol)) std::cout << report_table({rep}, cfg.tol);
    }
    return (pass == static_cast<int>(reports.size()) && aux_ok) ? 0 : kExitVerifyFail;
}

int cmd_catalog(const CliConfig& cfg) {
    std::ofstream file;
    std::ostream& out = open_out(cfg, file);
    out << registry_to_json() << "\n";
    return 0;
}

void add_common(CLI::App* sub, CliConfig& cfg, bool with_graph = true) {
    if (with_graph) {
        sub->add_option("--gen", cfg.gen, "generator spec, e.g. cycle:6, circulant:8:1,2");
        sub->add_option("--in", cfg.in_path, "edge-list input file");
    }
    sub->add_option("--format", cfg.format, "output format: pretty, json, csv");
    sub->add_option("--tol", cfg.tol, "numeric tolerance");
    sub->add_option("--out", cfg.out_path, "write output to file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplacian spectra and spanning-tree counts of xyz-transformations of regular graphs"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* t = app.add_subcommand("transform", "build G^xyz and emit it");
    add_common(t, cfg);
    t->add_option("--code", cfg.code, "transformation code over {0,1,+,-}")->required();

    auto* sp = app.add_subcommand("spectrum", "predicted (and optionally direct) spectrum of G^xyz");
    add_common(sp, cfg);
    sp->add_option("--code", cfg.code)->required();
    sp->add_flag("--check", cfg.check, "also compute the direct spectrum and compare");

    auto* tr = app.add_subcommand("trees", "spanning-tree count of G^xyz, formula vs Matrix-Tree");
    add_common(tr, cfg);
    tr->add_option("--code", cfg.code)->required();

    auto* tb = app.add_subcommand("table", "catalog rows for one graph");
    add_common(tb, cfg);
    tb->add_option("--codes", cfg.codes, "comma-separated code subset (default: all 64)");

    auto* vf = app.add_subcommand("verify", "verify the catalog against direct computation");
    add_common(vf, cfg);
    vf->add_option("--graphs", cfg.graphs, "comma-separated generator specs (default: standard corpus)");
    vf->add_option("--series", cfg.series, "operation series (c,l,+++,---) to check instead");

    auto* cat = app.add_subcommand("catalog", "emit all 64 formula records as JSON");
    add_common(cat, cfg, false);

    app.footer("Codes beginning with '-' need the = form, e.g. --code=--+ or --codes=---,-++");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*t) return cmd_transform(cfg);
        if (*sp) return cmd_spectrum(cfg);
        if (*tr) return cmd_trees(cfg);
        if (*tb) return cmd_table(cfg);
        if (*vf) return cmd_verify(cfg);
        if (*cat) return cmd_catalog(cfg);
    } catch (const cli_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const cli_domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
