#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "xyz/formulas.hpp"
#include "xyz/graph.hpp"
#include "xyz/transform.hpp"

namespace xyz {

struct VerificationReport {
    std::string graph_id;
    std::string code;
    double spectrum_max_abs_dev = 0.0;
    bool exact_identity = false;
    bool tree_formula_match = false;
    std::vector<std::string> notes;

    bool pass(double tol) const {
        return spectrum_max_abs_dev <= tol && exact_identity && tree_formula_match;
    }
};

struct CorpusGraph {
    std::string id;
    RegularGraph g;
};

// C3..C8, K4, K5, K_{3,3}, Petersen, Q3, matching(6).
const std::vector<CorpusGraph>& standard_corpus();

// Builds G^xyz, compares predicted vs direct spectrum, checks the exact
// polynomial identity at m+n+1 integer points against Bareiss determinants,
// and the tree formula against the Matrix-Tree count. Never throws: errors
// land in notes and fail the report.
VerificationReport verify_code(const RegularGraph& g, XyzCode code, double tol,
                               const std::string& graph_id = "");

// lambda_i(G) + lambda_{n-i}(G^c) = n for i = 1..n-1, within tol.
bool verify_reciprocity(const Graph& g, double tol);

// C_n^{xyz} isomorphic to C_n^{yxz} for every given code. Throws
// size_limit_error when 2n exceeds the isomorphism bound.
bool verify_cycle_isomorphism(int n, const std::vector<XyzCode>& codes);

// QQ^T = D + A, Q^T Q = 2I + A(G^l), and the all-ones identities
// Q^T J = 2J, QJ = rJ, JQ^T = rJ, JQ = 2J, JA = rJ, AJ = rJ, exactly.
bool verify_lemma_suite(const RegularGraph& g, std::string* first_failure = nullptr);

// verify_code over all 64 codes x the standard corpus, deterministic order.
std::vector<VerificationReport> run_corpus(double tol);
std::vector<VerificationReport> run_codes(const std::vector<CorpusGraph>& graphs,
                                          const std::vector<XyzCode>& codes, double tol);

struct CorpusSuiteResult {
    std::vector<VerificationReport> reports;
    bool reciprocity_ok = false;
    bool lemmas_ok = false;
    bool cycle_isomorphism_ok = false;
    std::vector<std::string> suite_notes;

    bool all_pass(double tol) const;
};

// The full run: every code-graph cell plus the reciprocity, lemma, and
// cycle-isomorphism suites (C4/C5 over all 64 codes, C6-C8 over the eight
// all-plus/minus codes, keeping the search inside the isomorphism bound).
CorpusSuiteResult run_corpus_full(double tol);

void write_reports_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports);
std::string report_table(const std::vector<VerificationReport>& reports, double tol);

}  // namespace xyz
