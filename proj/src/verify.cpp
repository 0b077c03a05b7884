#include "xyz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "xyz/eigen.hpp"
#include "xyz/matrix.hpp"

namespace xyz {

const std::vector<CorpusGraph>& standard_corpus() {
    static const std::vector<CorpusGraph> corpus = [] {
        std::vector<CorpusGraph> out;
        for (int k = 3; k <= 8; ++k)
            out.push_back({"C" + std::to_string(k), as_regular(cycle(k))});
        out.push_back({"K4", as_regular(complete(4))});
        out.push_back({"K5", as_regular(complete(5))});
        out.push_back({"K3,3", as_regular(complete_bipartite(3, 3))});
        out.push_back({"petersen", as_regular(petersen())});
        out.push_back({"Q3", as_regular(hypercube(3))});
        out.push_back({"matching6", as_regular(matching(6))});
        return out;
    }();
    return corpus;
}

VerificationReport verify_code(const RegularGraph& g, XyzCode code, double tol,
                               const std::string& graph_id) {
    VerificationReport rep;
    rep.graph_id = graph_id;
    rep.code = code.str();
    const long long n = g.n(), m = g.m(), r = g.r, s = n + m;
    try {
        transform_degree_check(g, code);
        const Graph built = xyz_transform(g, code);
        const IntMatrix lap_built = laplacian(built);
        const Spectrum direct = symmetric_eigenvalues(lap_built);
        const Spectrum sp_g = symmetric_eigenvalues(laplacian(g.graph));
        const FormulaEntry& entry = registry(code);

        const PredictedSpectrum pred = predict_spectrum(entry, n, m, r, sp_g, tol);
        rep.spectrum_max_abs_dev = max_pairwise_dev(pred.spectrum, direct);

        const IntPoly charpoly_g = char_poly_exact(laplacian(g.graph));
        rep.exact_identity = true;
        for (long long lambda0 = s + 2; lambda0 <= s + m + n + 2; ++lambda0) {
            Rational claimed = eval_L_exact(entry, charpoly_g, n, m, r, Rational(lambda0));
            BigInt direct_det = char_poly_at(lap_built, BigInt(lambda0));
            if (claimed != Rational(direct_det)) {
                rep.exact_identity = false;
                rep.notes.push_back("polynomial identity fails at lambda=" +
                                    std::to_string(lambda0));
                break;
            }
        }

        const BigInt formula_trees = eval_trees(entry, charpoly_g, n, m, r);
        const BigInt direct_trees = matrix_tree_count(built);
        rep.tree_formula_match = (formula_trees == direct_trees);
        if (!rep.tree_formula_match)
            rep.notes.push_back("tree count mismatch: formula " + formula_trees.str() +
                                " vs Matrix-Tree " + direct_trees.str());
    } catch (const std::exception& e) {
        rep.notes.push_back(std::string("error: ") + e.what());
        rep.exact_identity = false;
        rep.tree_formula_match = false;
        rep.spectrum_max_abs_dev = std::numeric_limits<double>::infinity();
    }
    return rep;
}

bool verify_reciprocity(const Graph& g, double tol) {
    const int n = g.n();
    const Spectrum a = symmetric_eigenvalues(laplacian(g));
    const Spectrum b = symmetric_eigenvalues(laplacian(complement(g)));
    for (int i = 1; i <= n - 1; ++i) {
        double lhs = a.values[i - 1] + b.values[n - i - 1];
        if (std::fabs(lhs - n) > tol) return false;
    }
    return true;
}

bool verify_cycle_isomorphism(int n, const std::vector<XyzCode>& codes) {
    const RegularGraph g = as_regular(cycle(n));
    for (const XyzCode& code : codes) {
        XyzCode swapped{code.y, code.x, code.z};
        const Graph a = xyz_transform(g, code);
        const Graph b = xyz_transform(g, swapped);
        if (!is_isomorphic(a, b)) return false;
    }
    return true;
}

bool verify_lemma_suite(const RegularGraph& g, std::string* first_failure) {
    const int n = g.n(), m = g.m();
    const BigInt r = g.r;
    const IntMatrix q = incidence(g.graph);
    const IntMatrix qt = q.transpose();
    const IntMatrix a = adjacency(g.graph);
    auto fail = [&](const char* what) {
        if (first_failure) *first_failure = what;
        return false;
    };
    if (q * qt != degree_matrix(g.graph) + a) return fail("QQ^T = D + A");
    if (qt * q != IntMatrix::identity(m).scaled(2) + adjacency(line_graph(g.graph)))
        return fail("Q^T Q = 2I + A(G^l)");
    for (int k : {1, 2}) {
        if (qt * IntMatrix::ones(n, k) != IntMatrix::ones(m, k).scaled(2))
            return fail("Q^T J_nk = 2 J_mk");
        if (q * IntMatrix::ones(m, k) != IntMatrix::ones(n, k).scaled(r))
            return fail("Q J_mk = r J_nk");
        if (IntMatrix::ones(k, m) * qt != IntMatrix::ones(k, n).scaled(r))
            return fail("J_km Q^T = r J_kn");
        if (IntMatrix::ones(k, n) * q != IntMatrix::ones(k, m).scaled(2))
            return fail("J_kn Q = 2 J_km");
        if (IntMatrix::ones(k, n) * a != IntMatrix::ones(k, n).scaled(r))
            return fail("J_kn A = r J_kn");
        if (a * IntMatrix::ones(n, k) != IntMatrix::ones(n, k).scaled(r))
            return fail("A J_nk = r J_nk");
    }
    return true;
}

std::vector<VerificationReport> run_codes(const std::vector<CorpusGraph>& graphs,
                                          const std::vector<XyzCode>& codes, double tol) {
    std::vector<VerificationReport> reports;
    reports.reserve(graphs.size() * codes.size());
    for (const auto& cg : graphs)
        for (const auto& code : codes) reports.push_back(verify_code(cg.g, code, tol, cg.id));
    return reports;
}

std::vector<VerificationReport> run_corpus(double tol) {
    return run_codes(standard_corpus(), all_codes(), tol);
}

bool CorpusSuiteResult::all_pass(double tol) const {
    for (const auto& rep : reports)
        if (!rep.pass(tol)) return false;
    return reciprocity_ok && lemmas_ok && cycle_isomorphism_ok;
}

CorpusSuiteResult run_corpus_full(double tol) {
    CorpusSuiteResult out;
    out.reports = run_corpus(tol);
    out.reciprocity_ok = true;
    out.lemmas_ok = true;
    for (const auto& cg : standard_corpus()) {
        if (!verify_reciprocity(cg.g.graph, tol)) {
            out.reciprocity_ok = false;
            out.suite_notes.push_back("reciprocity failed on " + cg.id);
        }
        std::string why;
        if (!verify_lemma_suite(cg.g, &why)) {
            out.lemmas_ok = false;
            out.suite_notes.push_back("lemma suite failed on " + cg.id + ": " + why);
        }
    }
    out.cycle_isomorphism_ok = true;
    for (int k : {4, 5}) {
        if (!verify_cycle_isomorphism(k, all_codes())) {
            out.cycle_isomorphism_ok = false;
            out.suite_notes.push_back("cycle isomorphism failed on C" + std::to_string(k));
        }
    }
    std::vector<XyzCode> pm_codes;
    for (const XyzCode& code : all_codes())
        if ((code.x == Letter::Plus || code.x == Letter::Minus) &&
            (code.y == Letter::Plus || code.y == Letter::Minus) &&
            (code.z == Letter::Plus || code.z == Letter::Minus))
            pm_codes.push_back(code);
    for (int k : {6, 7, 8}) {
        if (!verify_cycle_isomorphism(k, pm_codes)) {
            out.cycle_isomorphism_ok = false;
            out.suite_notes.push_back("cycle isomorphism failed on C" + std::to_string(k));
        }
    }
    return out;
}

void write_reports_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports) {
    for (const auto& rep : reports) {
        nlohmann::json j;
        j["graph"] = rep.graph_id;
        j["code"] = rep.code;
        j["spectrum_max_abs_dev"] = rep.spectrum_max_abs_dev;
        j["exact_identity"] = rep.exact_identity;
        j["tree_formula_match"] = rep.tree_formula_match;
        j["notes"] = rep.notes;
        out << j.dump() << "\n";
    }
}

std::string report_table(const std::vector<VerificationReport>& reports, double tol) {
    std::ostringstream os;
    os << "graph       code  max_dev        exact  trees  status\n";
    for (const auto& rep : reports) {
        char dev[32];
        std::snprintf(dev, sizeof dev, "%-13.3e", rep.spectrum_max_abs_dev);
        char id[16];
        std::snprintf(id, sizeof id, "%-11s", rep.graph_id.c_str());
        os << id << " " << rep.code << "   " << dev << "  " << (rep.exact_identity ? "yes " : "NO  ")
           << "  " << (rep.tree_formula_match ? "yes " : "NO  ") << "  "
           << (rep.pass(tol) ? "pass" : "FAIL");
        for (const auto& note : rep.notes) os << "  [" << note << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace xyz
