// Acceptance suite: end-to-end checks of the closed-form catalog against
// explicitly built transformations. Prints one pass/fail line per criterion;
// the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "xyz/eigen.hpp"
#include "xyz/formulas.hpp"
#include "xyz/matrix.hpp"
#include "xyz/verify.hpp"

using namespace xyz;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double now_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Spectrum spec_of(const Graph& g) { return symmetric_eigenvalues(laplacian(g)); }

bool matches(const Spectrum& got, const std::vector<double>& want, double tol) {
    if (got.size() != static_cast<int>(want.size())) return false;
    for (size_t i = 0; i < want.size(); ++i)
        if (std::fabs(got.values[i] - want[i]) > tol) return false;
    return true;
}

// ---- criterion 1: golden cycle spectra -------------------------------------

void criterion_golden() {
    auto t0 = std::chrono::steady_clock::now();
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    const std::vector<double> c1 = {6, 6, 4 + s2, 4 + s2, 4, 4 - s2, 4 - s2, 0};
    const std::vector<double> c2 = {4 + s2, 4 + s2, 4, 4 - s2, 4 - s2, 2, 2, 0};
    const std::vector<double> c3 = {6, 4 + s2, 4 + s2, 4, 4 - s2, 4 - s2, 2, 0};
    const std::vector<double> p1 = {4 + s5, 4 + s5, 5, 5, 5, 5, 4, 4 - s5, 4 - s5, 0};
    const std::vector<double> p2 = {5 + s5, 5 + s5, 4, 4, 4, 4, 4, 5 - s5, 5 - s5, 0};
    const double a = 0.5 * (9 + std::sqrt(11 + 2 * s5)), b = 0.5 * (9 + std::sqrt(11 - 2 * s5));
    const std::vector<double> p3 = {a, a, b, b, 4, 9 - b, 9 - b, 9 - a, 9 - a, 0};

    struct Golden {
        int n;
        const char* code;
        const std::vector<double>* want;
    };
    const Golden cases[] = {
        {4, "+++", &c1}, {4, "++-", &c1}, {4, "--+", &c2}, {4, "---", &c2}, {4, "-++", &c3},
        {4, "+-+", &c3}, {5, "+++", &p1}, {5, "--+", &p2}, {5, "-++", &p3}, {5, "+-+", &p3},
    };

    bool ok = true;
    std::string detail;
    for (const Golden& c : cases) {
        RegularGraph g = as_regular(cycle(c.n));
        XyzCode code = XyzCode::parse(c.code);
        auto pred = predict_spectrum(registry(code), g.n(), g.m(), g.r, spec_of(g.graph), 1e-9);
        Spectrum direct = spec_of(xyz_transform(g, code));
        if (!matches(pred.spectrum, *c.want, 1e-9) || !matches(direct, *c.want, 1e-9)) {
            ok = false;
            detail = "C" + std::to_string(c.n) + "^{" + c.code + "} off the golden values";
            break;
        }
    }
    double secs = now_seconds(t0);
    if (secs >= 1.0) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "10 spectra at 1e-9, %.2f s", secs);
    report(1, "golden cycle spectra", ok, detail.empty() ? buf : detail);
}

// ---- criterion 2: full identity sweep --------------------------------------

void criterion_sweep() {
    auto t0 = std::chrono::steady_clock::now();
    const auto reports = run_corpus(1e-8);
    double secs = now_seconds(t0);
    int pass = 0;
    double worst = 0;
    std::string first_fail;
    for (const auto& rep : reports) {
        if (rep.pass(1e-8))
            ++pass;
        else if (first_fail.empty())
            first_fail = rep.graph_id + "^{" + rep.code + "}";
        worst = std::max(worst, rep.spectrum_max_abs_dev);
    }
    bool ok = pass == static_cast<int>(reports.size()) && secs < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/%zu cells, worst spectrum dev %.2e, %.1f s%s%s", pass,
                  reports.size(), worst, secs, first_fail.empty() ? "" : ", first failure ",
                  first_fail.c_str());
    report(2, "full identity sweep (64 codes x 12 graphs)", ok, buf);
}

// ---- criterion 3: spanning-tree formulas -----------------------------------

void criterion_trees() {
    bool ok = true;
    std::string detail;

    {
        RegularGraph c3 = as_regular(cycle(3));
        BigInt t = eval_trees(registry(XyzCode::parse("00+")),
                              char_poly_exact(laplacian(c3.graph)), 3, 3, 2);
        if (t != 6) {
            ok = false;
            detail = "t(C3^{00+}) != 6";
        }
    }

    for (const auto& cg : standard_corpus()) {
        const long long n = cg.g.n(), m = cg.g.m(), r = cg.g.r;
        IntPoly charpoly = char_poly_exact(laplacian(cg.g.graph));
        const BigInt base_trees = matrix_tree_count(cg.g.graph);

        // closed forms in (n, m, r, t(G)) for the subdivision-like rows
        const Rational two_pow = pow_rational(Rational(2), m - n);
        Rational want00 = Rational(n) * (r + 2) * two_pow * Rational(base_trees) / (n + m);
        Rational want0pp = want00 * pow_rational(Rational(r + 1), m - 1);
        Rational want_line = Rational(n) * pow_rational(Rational(2 * r), m - n) *
                             Rational(base_trees) / Rational(m);

        BigInt got00 = eval_trees(registry(XyzCode::parse("00+")), charpoly, n, m, r);
        BigInt got0pp = eval_trees(registry(XyzCode::parse("0++")), charpoly, n, m, r);
        BigInt direct00 = matrix_tree_count(xyz_transform(cg.g, XyzCode::parse("00+")));
        BigInt direct0pp = matrix_tree_count(xyz_transform(cg.g, XyzCode::parse("0++")));
        BigInt direct_line = matrix_tree_count(line_graph(cg.g.graph));

        if (Rational(got00) != want00 || got00 != direct00) {
            ok = false;
            detail = "00+ row broke on " + cg.id;
            break;
        }
        if (Rational(got0pp) != want0pp || got0pp != direct0pp) {
            ok = false;
            detail = "0++ row broke on " + cg.id;
            break;
        }
        if (want_line != Rational(direct_line)) {
            ok = false;
            detail = "line-graph tree formula broke on " + cg.id;
            break;
        }

        BigInt gotp0p = eval_trees(registry(XyzCode::parse("+0+")), charpoly, n, m, r);
        if (gotp0p != pow_bigint(BigInt(3), n - 1) * got00) {
            ok = false;
            detail = "3^{n-1} ratio broke on " + cg.id;
            break;
        }
    }
    report(3, "spanning-tree closed forms and ratio", ok, detail);
}

// ---- criterion 4: reciprocity pairing --------------------------------------

void criterion_reciprocity() {
    bool ok = true;
    std::string detail;
    for (const auto& cg : standard_corpus()) {
        if (!verify_reciprocity(cg.g.graph, 1e-8)) {
            ok = false;
            detail = "base reciprocity broke on " + cg.id;
            break;
        }
        const long long s = cg.g.n() + cg.g.m();
        std::map<std::string, Spectrum> built;
        for (const XyzCode& code : all_codes())
            built[code.str()] = spec_of(xyz_transform(cg.g, code));
        for (const XyzCode& code : all_codes()) {
            const Spectrum& f = built[code.str()];
            const Spectrum& fc = built[code.bar_complement().str()];
            for (long long i = 1; i <= s - 1 && ok; ++i)
                if (std::fabs(f.values[i - 1] + fc.values[s - i - 1] - s) > 1e-8) {
                    ok = false;
                    detail = cg.id + "^{" + code.str() + "} pairing index " + std::to_string(i);
                }
            if (!ok) break;
        }
        if (!ok) break;
    }
    report(4, "reciprocity pairing on base graphs and all transformations", ok, detail);
}

// ---- criterion 5: incidence lemma identities -------------------------------

void criterion_lemmas() {
    bool ok = true;
    std::string detail;
    for (const auto& cg : standard_corpus()) {
        std::string why;
        if (!verify_lemma_suite(cg.g, &why)) {
            ok = false;
            detail = cg.id + ": " + why;
            break;
        }
    }
    report(5, "incidence and all-ones matrix identities", ok, detail);
}

// ---- criterion 6: fixed eigenvalue multiplicities --------------------------

void criterion_multiplicities() {
    bool ok = true;
    std::string detail;
    const Letter letters[4] = {Letter::Zero, Letter::One, Letter::Plus, Letter::Minus};
    for (const auto& cg : standard_corpus()) {
        const long long n = cg.g.n(), m = cg.g.m(), r = cg.g.r, s = n + m;
        if (m <= n) continue;
        for (Letter x : letters) {
            for (Letter y : letters) {
                for (Letter z : {Letter::Plus, Letter::Minus}) {
                    double fixed = 0;
                    if (z == Letter::Plus) {
                        fixed = y == Letter::Zero   ? 2.0
                                : y == Letter::One  ? double(m + 2)
                                : y == Letter::Plus ? double(2 * r + 2)
                                                    : double(m - 2 * r + 2);
                    } else {
                        fixed = y == Letter::Zero   ? double(n - 2)
                                : y == Letter::One  ? double(s - 2)
                                : y == Letter::Plus ? double(n + 2 * r - 2)
                                                    : double(s - 2 * r - 2);
                    }
                    double single = z == Letter::Plus ? double(r + 2) : double(s - r - 2);
                    Spectrum sp = spec_of(xyz_transform(cg.g, XyzCode{x, y, z}));
                    if (sp.count_near(fixed, 1e-6) < m - n || sp.count_near(single, 1e-6) < 1) {
                        ok = false;
                        detail = cg.id + "^{" + XyzCode{x, y, z}.str() + "}";
                    }
                }
            }
        }
        if (!ok) break;
    }
    report(6, "fixed eigenvalues appear with multiplicity >= m-n", ok, detail);
}

// ---- criterion 7: swap isomorphisms ----------------------------------------

void criterion_isomorphism() {
    bool ok = true;
    std::string detail;
    if (!verify_cycle_isomorphism(4, all_codes())) {
        ok = false;
        detail = "C4 full sweep";
    }
    if (ok && !verify_cycle_isomorphism(5, all_codes())) {
        ok = false;
        detail = "C5 full sweep";
    }
    std::vector<XyzCode> pm_codes;
    for (const XyzCode& code : all_codes())
        if ((code.x == Letter::Plus || code.x == Letter::Minus) &&
            (code.y == Letter::Plus || code.y == Letter::Minus) &&
            (code.z == Letter::Plus || code.z == Letter::Minus))
            pm_codes.push_back(code);
    for (int k = 6; ok && k <= 8; ++k) {
        if (!verify_cycle_isomorphism(k, pm_codes)) {
            ok = false;
            detail = "C" + std::to_string(k) + " plus/minus sweep";
        }
    }
    if (ok) {
        RegularGraph c4 = as_regular(cycle(4));
        if (!is_isomorphic(bipartite_incidence_graph(c4, false),
                           bipartite_incidence_graph(c4, true))) {
            ok = false;
            detail = "incidence graph of C4 vs its bipartite complement";
        }
    }
    report(7, "swap isomorphisms of cycle transformations", ok, detail);
}

// ---- criterion 8: operation-series composer --------------------------------

void criterion_composer() {
    bool ok = true;
    std::string detail;
    const std::vector<std::vector<SeriesOp>> series = {
        {SeriesOp::Complement},
        {SeriesOp::Line},
        {SeriesOp::TotalPlus},
        {SeriesOp::Complement, SeriesOp::TotalPlus},
        {SeriesOp::Line, SeriesOp::TotalMinus},
    };
    for (const auto* spec : {"petersen", "cycle:6"}) {
        RegularGraph g = as_regular(generate(spec));
        for (const auto& ops : series) {
            SeriesState st{g.n(), g.r, spec_of(g.graph)};
            st = apply_operation_series(st, ops, 1e-8);
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
            double dev = max_pairwise_dev(st.sp, spec_of(composed));
            if (dev > 1e-8) {
                ok = false;
                detail = std::string(spec) + " series [";
                for (size_t i = 0; i < ops.size(); ++i)
                    detail += (i ? "," : "") + series_op_name(ops[i]);
                detail += "]";
            }
        }
    }
    report(8, "operation-series spectra match composed graphs", ok, detail);
}

}  // namespace

int main() {
    criterion_golden();
    criterion_sweep();
    criterion_trees();
    criterion_reciprocity();
    criterion_lemmas();
    criterion_multiplicities();
    criterion_isomorphism();
    criterion_composer();
    std::printf("%s (%d criteria failed)\n", g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
                g_failures);
    return g_failures;
}
