#include <sstream>

#include "doctest.h"
#include "xyz/matrix.hpp"
#include "xyz/poly.hpp"
#include "xyz/verify.hpp"

using namespace xyz;

TEST_CASE("verify_code on worked examples") {
    VerificationReport rep =
        verify_code(as_regular(cycle(4)), XyzCode::parse("+++"), 1e-8, "C4");
    CHECK(rep.pass(1e-8));
    CHECK(rep.spectrum_max_abs_dev < 1e-9);
    CHECK(rep.exact_identity);
    CHECK(rep.tree_formula_match);

    CHECK(verify_code(as_regular(cycle(5)), XyzCode::parse("--+"), 1e-8, "C5").pass(1e-8));

    // m - n = -2, exercised through exact division and root cancellation
    CHECK(verify_code(as_regular(matching(4)), XyzCode::parse("00+"), 1e-8, "2K2").pass(1e-8));
}

TEST_CASE("reciprocity on sample graphs") {
    CHECK(verify_reciprocity(cycle(4), 1e-8));
    CHECK(verify_reciprocity(complete(5), 1e-8));
    CHECK(verify_reciprocity(petersen(), 1e-8));
    CHECK(verify_reciprocity(matching(6), 1e-8));
}

TEST_CASE("cycle swap isomorphism") {
    CHECK(verify_cycle_isomorphism(4, all_codes()));
    // identical-code pairs are trivially isomorphic
    std::vector<XyzCode> diag = {XyzCode::parse("000"), XyzCode::parse("++0"),
                                 XyzCode::parse("--1")};
    CHECK(verify_cycle_isomorphism(3, diag));
    CHECK_THROWS_AS(verify_cycle_isomorphism(12, {XyzCode::parse("+++")}), size_limit_error);
}

TEST_CASE("lemma suite holds exactly") {
    for (const auto* spec : {"cycle:6", "petersen", "complete:4", "matching:6"}) {
        std::string why;
        CHECK(verify_lemma_suite(as_regular(generate(spec)), &why));
        CHECK(why.empty());
    }
}

TEST_CASE("standard corpus composition") {
    const auto& corpus = standard_corpus();
    REQUIRE(corpus.size() == 12);
    bool seen_r[5] = {false, false, false, false, false};
    for (const auto& cg : corpus)
        if (cg.g.r <= 4) seen_r[cg.g.r] = true;
    CHECK(seen_r[1]);
    CHECK(seen_r[2]);
    CHECK(seen_r[3]);
    CHECK(seen_r[4]);
    CHECK(corpus.front().id == "C3");
    CHECK(corpus.back().id == "matching6");
}

TEST_CASE("verification runs are deterministic") {
    std::vector<CorpusGraph> graphs = {{"C4", as_regular(cycle(4))}};
    auto a = run_codes(graphs, all_codes(), 1e-8);
    auto b = run_codes(graphs, all_codes(), 1e-8);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].graph_id == b[i].graph_id);
        CHECK(a[i].code == b[i].code);
        CHECK(a[i].spectrum_max_abs_dev == b[i].spectrum_max_abs_dev);
        CHECK(a[i].exact_identity == b[i].exact_identity);
        CHECK(a[i].tree_formula_match == b[i].tree_formula_match);
        CHECK(a[i].notes == b[i].notes);
    }
}

TEST_CASE("line graph polynomial identity on the corpus") {
    // L(lambda, G^l) = (lambda - 2r)^{m-n} L(lambda, G) as exact polynomials;
    // for m < n the factor moves to the other side.
    for (const auto& cg : standard_corpus()) {
        IntPoly base = char_poly_exact(laplacian(cg.g.graph));
        IntPoly line = char_poly_exact(laplacian(line_graph(cg.g.graph)));
        IntPoly factor = IntPoly::linear_root(BigInt(2 * cg.g.r));
        IntPoly lhs = line, rhs = base;
        for (int k = 0; k < cg.g.m() - cg.g.n(); ++k) rhs = rhs * factor;
        for (int k = 0; k < cg.g.n() - cg.g.m(); ++k) lhs = lhs * factor;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("full corpus suite aggregates the identity checks") {
    CorpusSuiteResult full = run_corpus_full(1e-8);
    CHECK(full.reports.size() == 768);
    CHECK(full.reciprocity_ok);
    CHECK(full.lemmas_ok);
    CHECK(full.cycle_isomorphism_ok);
    CHECK(full.all_pass(1e-8));
    CHECK(full.suite_notes.empty());
}

TEST_CASE("report export") {
    std::vector<CorpusGraph> graphs = {{"C3", as_regular(cycle(3))}};
    auto reports = run_codes(graphs, {XyzCode::parse("+++"), XyzCode::parse("000")}, 1e-8);
    REQUIRE(reports.size() == 2);

    std::ostringstream js;
    write_reports_jsonl(js, reports);
    CHECK(js.str().find("\"graph\":\"C3\"") != std::string::npos);
    CHECK(js.str().find("\"code\":\"+++\"") != std::string::npos);

    std::string table = report_table(reports, 1e-8);
    CHECK(table.find("pass") != std::string::npos);
    CHECK(table.find("FAIL") == std::string::npos);
}
