#include "xyz/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"

namespace xyz {

NmrPoly NmrPoly::c(long long k) {
    NmrPoly p;
    if (k != 0) p.terms[{0, 0, 0}] = k;
    return p;
}
NmrPoly NmrPoly::n() {
    NmrPoly p;
    p.terms[{1, 0, 0}] = 1;
    return p;
}
NmrPoly NmrPoly::m() {
    NmrPoly p;
    p.terms[{0, 1, 0}] = 1;
    return p;
}
NmrPoly NmrPoly::r() {
    NmrPoly p;
    p.terms[{0, 0, 1}] = 1;
    return p;
}
NmrPoly NmrPoly::s() { return n() + m(); }

NmrPoly NmrPoly::operator+(const NmrPoly& o) const {
    NmrPoly out = *this;
    for (const auto& [e, v] : o.terms) {
        auto it = out.terms.find(e);
        if (it == out.terms.end()) {
            out.terms[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

NmrPoly NmrPoly::operator-() const {
    NmrPoly out = *this;
    for (auto& [e, v] : out.terms) v = -v;
    return out;
}

NmrPoly NmrPoly::operator-(const NmrPoly& o) const { return *this + (-o); }

NmrPoly NmrPoly::operator*(const NmrPoly& o) const {
    NmrPoly out;
    for (const auto& [e1, v1] : terms)
        for (const auto& [e2, v2] : o.terms) {
            std::array<int, 3> e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            auto it = out.terms.find(e);
            if (it == out.terms.end()) {
                out.terms[e] = v1 * v2;
                if (out.terms[e] == 0) out.terms.erase(e);
            } else {
                it->second += v1 * v2;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

BigInt NmrPoly::eval(long long n, long long m, long long r) const {
    BigInt acc = 0;
    for (const auto& [e, v] : terms) {
        BigInt term = v;
        term *= pow_bigint(n, e[0]);
        term *= pow_bigint(m, e[1]);
        term *= pow_bigint(r, e[2]);
        acc += term;
    }
    return acc;
}

std::string NmrPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        long long v = it->second;
        const auto& e = it->first;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        long long mag = v < 0 ? -v : v;
        bool has_var = e[0] || e[1] || e[2];
        if (mag != 1 || !has_var) os << mag;
        const char* names[3] = {"n", "m", "r"};
        bool printed = (mag != 1 || !has_var);
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < e[i]; ++k) {
                if (printed) os << "*";
                os << names[i];
                printed = true;
            }
        }
        first = false;
    }
    return os.str();
}

IntPoly FormulaEntry::tree_g(long long n, long long m, long long r) const {
    std::vector<BigInt> coeffs;
    for (int k = 0; k <= 2; ++k) coeffs.push_back(f[0][k].eval(n, m, r));
    if (eigen_deg % 2 != 0)
        for (auto& v : coeffs) v = -v;
    return IntPoly(std::move(coeffs));
}

namespace {

using P = NmrPoly;

// bivariate F(lambda, t) with NmrPoly coefficients, lambda- and t-degree <= 2
struct Biv {
    std::array<std::array<P, 3>, 3> f{};

    static Biv lam_shift(const P& a, long long tcoef) {
        // lambda - a - tcoef*t
        Biv b;
        b.f[1][0] = P::c(1);
        b.f[0][0] = -a;
        b.f[0][1] = P::c(-tcoef);
        return b;
    }
    static Biv term_t(long long c0, long long tcoef) {
        Biv b;
        b.f[0][0] = P::c(c0);
        b.f[0][1] = P::c(tcoef);
        return b;
    }
    Biv operator*(const Biv& o) const {
        Biv out;
        for (int j1 = 0; j1 < 3; ++j1)
            for (int k1 = 0; k1 < 3; ++k1) {
                if (f[j1][k1].is_zero()) continue;
                for (int j2 = 0; j2 + j1 < 3; ++j2)
                    for (int k2 = 0; k2 + k1 < 3; ++k2)
                        out.f[j1 + j2][k1 + k2] =
                            out.f[j1 + j2][k1 + k2] + f[j1][k1] * o.f[j2][k2];
            }
        return out;
    }
    Biv operator+(const Biv& o) const {
        Biv out;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out.f[j][k] = f[j][k] + o.f[j][k];
        return out;
    }
};

void set_F(FormulaEntry& e, const Biv& b, int deg) {
    e.eigen_deg = deg;
    e.f = b.f;
}

// L(lambda, G^x) on the V side, contributing scalar factors and possibly a
// per-eigenvalue linear factor.
void x_part(FormulaEntry& e, Letter x, Biv& F, bool& has_f) {
    switch (x) {
        case Letter::Zero:
            e.scalars.push_back({P::c(0), P::n()});
            break;
        case Letter::One:
            e.scalars.push_back({P::c(0), P::c(1)});
            e.scalars.push_back({P::n(), P::n() - P::c(1)});
            break;
        case Letter::Plus:
            e.scalars.push_back({P::c(0), P::c(1)});
            F = has_f ? F * Biv::lam_shift(P::c(0), 1) : Biv::lam_shift(P::c(0), 1);
            has_f = true;
            break;
        case Letter::Minus:
            e.scalars.push_back({P::c(0), P::c(1)});
            F = has_f ? F * Biv::lam_shift(P::n(), -1) : Biv::lam_shift(P::n(), -1);
            has_f = true;
            break;
    }
}

// L(lambda, (G^l)^y) on the E side.
void y_part(FormulaEntry& e, Letter y, Biv& F, bool& has_f) {
    switch (y) {
        case Letter::Zero:
            e.scalars.push_back({P::c(0), P::m()});
            break;
        case Letter::One:
            e.scalars.push_back({P::c(0), P::c(1)});
            e.scalars.push_back({P::m(), P::m() - P::c(1)});
            break;
        case Letter::Plus:
            e.scalars.push_back({P::c(0), P::c(1)});
            e.scalars.push_back({P::c(2) * P::r(), P::m() - P::n()});
            F = has_f ? F * Biv::lam_shift(P::c(0), 1) : Biv::lam_shift(P::c(0), 1);
            has_f = true;
            break;
        case Letter::Minus:
            e.scalars.push_back({P::c(0), P::c(1)});
            e.scalars.push_back({P::m() - P::c(2) * P::r(), P::m() - P::n()});
            F = has_f ? F * Biv::lam_shift(P::m(), -1) : Biv::lam_shift(P::m(), -1);
            has_f = true;
            break;
    }
}

// G^{xy0} is the disjoint union of G^x and (G^l)^y, so the polynomial is the
// product of the two parts.
FormulaEntry make_z0(Letter x, Letter y) {
    FormulaEntry e;
    e.code = {x, y, Letter::Zero};
    Biv F;
    bool has_f = false;
    x_part(e, x, F, has_f);
    y_part(e, y, F, has_f);
    // merge the zero roots into a single factor
    P zero_mult = P::c(0);
    std::vector<ScalarFactor> rest;
    for (auto& sf : e.scalars) {
        if (sf.root.is_zero())
            zero_mult = zero_mult + sf.mult;
        else
            rest.push_back(sf);
    }
    e.scalars.clear();
    e.scalars.push_back({P::c(0), zero_mult});
    for (auto& sf : rest) e.scalars.push_back(sf);
    if (has_f) {
        int deg = !F.f[2][0].is_zero() || !F.f[2][1].is_zero() || !F.f[2][2].is_zero() ? 2 : 1;
        set_F(e, F, deg);
    }
    return e;
}

// Every z=+ row factors as lambda (lambda-r-2) (lambda-fixed)^{m-n}
// prod { A_x(lambda,t) B_y(lambda,t) - 2r + t }.
FormulaEntry make_zplus(Letter x, Letter y) {
    FormulaEntry e;
    e.code = {x, y, Letter::Plus};
    e.scalars.push_back({P::c(0), P::c(1)});
    e.scalars.push_back({P::r() + P::c(2), P::c(1)});
    P fixed;
    switch (y) {
        case Letter::Zero: fixed = P::c(2); break;
        case Letter::One: fixed = P::m() + P::c(2); break;
        case Letter::Plus: fixed = P::c(2) * P::r() + P::c(2); break;
        case Letter::Minus: fixed = P::m() - P::c(2) * P::r() + P::c(2); break;
    }
    e.scalars.push_back({fixed, P::m() - P::n()});

    Biv A, B;
    switch (x) {
        case Letter::Zero: A = Biv::lam_shift(P::r(), 0); break;
        case Letter::One: A = Biv::lam_shift(P::n() + P::r(), 0); break;
        case Letter::Plus: A = Biv::lam_shift(P::r(), 1); break;
        case Letter::Minus: A = Biv::lam_shift(P::n() + P::r(), -1); break;
    }
    switch (y) {
        case Letter::Zero: B = Biv::lam_shift(P::c(2), 0); break;
        case Letter::One: B = Biv::lam_shift(P::m() + P::c(2), 0); break;
        case Letter::Plus: B = Biv::lam_shift(P::c(2), 1); break;
        case Letter::Minus: B = Biv::lam_shift(P::m() + P::c(2), -1); break;
    }
    Biv tail;
    tail.f[0][0] = P::c(-2) * P::r();
    tail.f[0][1] = P::c(1);
    set_F(e, A * B + tail, 2);
    return e;
}

// Reciprocity: the spectrum of the complement on s vertices is
// {0} union {s - mu} over the non-minimal eigenvalues; in factor form the
// zero root keeps one copy, everything else maps root -> s - root, and
// F'(lambda,t) = +-F(s-lambda,t) normalized monic.
FormulaEntry complement_entry(const FormulaEntry& src, XyzCode code) {
    FormulaEntry e;
    e.code = code;
    const P s = P::s();
    e.scalars.push_back({P::c(0), P::c(1)});
    for (const auto& sf : src.scalars) {
        if (sf.root.is_zero()) {
            P rem = sf.mult - P::c(1);
            if (!rem.is_zero()) e.scalars.push_back({s, rem});
        } else {
            e.scalars.push_back({s - sf.root, sf.mult});
        }
    }
    e.eigen_deg = src.eigen_deg;
    if (src.eigen_deg == 2) {
        for (int k = 0; k < 3; ++k) {
            e.f[2][k] = src.f[2][k];
            e.f[1][k] = -(P::c(2) * s * src.f[2][k] + src.f[1][k]);
            e.f[0][k] = s * s * src.f[2][k] + s * src.f[1][k] + src.f[0][k];
        }
    } else if (src.eigen_deg == 1) {
        for (int k = 0; k < 3; ++k) {
            e.f[1][k] = src.f[1][k];
            e.f[0][k] = -(s * src.f[1][k] + src.f[0][k]);
        }
    }
    return e;
}

std::map<std::string, FormulaEntry> build_registry() {
    const Letter letters[4] = {Letter::Zero, Letter::One, Letter::Plus, Letter::Minus};
    std::map<std::string, FormulaEntry> reg;
    for (Letter x : letters)
        for (Letter y : letters) {
            FormulaEntry z0 = make_z0(x, y);
            FormulaEntry zp = make_zplus(x, y);
            reg[z0.code.str()] = z0;
            reg[zp.code.str()] = zp;
        }
    for (Letter x : letters)
        for (Letter y : letters) {
            XyzCode c1{x, y, Letter::One};
            XyzCode cm{x, y, Letter::Minus};
            reg[c1.str()] = complement_entry(reg.at(XyzCode{bar(x), bar(y), Letter::Zero}.str()), c1);
            reg[cm.str()] = complement_entry(reg.at(XyzCode{bar(x), bar(y), Letter::Plus}.str()), cm);
        }
    return reg;
}

const std::map<std::string, FormulaEntry>& full_registry() {
    static const std::map<std::string, FormulaEntry> reg = build_registry();
    return reg;
}

}  // namespace

const FormulaEntry& registry(XyzCode code) { return full_registry().at(code.str()); }

PredictedSpectrum predict_spectrum(const FormulaEntry& entry, long long n, long long m,
                                   long long r, const Spectrum& sp, double tol) {
    if (static_cast<long long>(sp.values.size()) != n)
        throw std::invalid_argument("spectrum size does not match n");
    if (n > 0 && std::fabs(sp.values.back()) > 1e-6)
        throw std::invalid_argument("smallest eigenvalue of a Laplacian spectrum must be ~0");

    PredictedSpectrum out;
    std::vector<std::pair<double, long long>> debts;
    for (const auto& sf : entry.scalars) {
        double root = to_double(sf.root.eval(n, m, r));
        BigInt mult_big = sf.mult.eval(n, m, r);
        long long mult = mult_big.convert_to<long long>();
        if (mult > 0)
            out.fixed.emplace_back(root, mult);
        else if (mult < 0)
            debts.emplace_back(root, -mult);
    }

    std::vector<double> pool;
    if (entry.eigen_deg > 0) {
        for (long long i = 0; i + 1 < n; ++i) {
            double t = sp.values[i];
            double coef[3] = {0, 0, 0};
            for (int j = 0; j <= entry.eigen_deg; ++j) {
                double tk = 1.0;
                for (int k = 0; k <= 2; ++k) {
                    if (!entry.f[j][k].is_zero())
                        coef[j] += to_double(entry.f[j][k].eval(n, m, r)) * tk;
                    tk *= t;
                }
            }
            std::vector<double> roots;
            if (entry.eigen_deg == 1) {
                roots.push_back(-coef[0] / coef[1]);
            } else {
                double a = coef[2], b = coef[1], c = coef[0];
                double disc = b * b - 4.0 * a * c;
                double scale = std::max({1.0, b * b, std::fabs(4.0 * a * c)});
                if (disc < -tol * scale)
                    throw complex_roots_error("negative discriminant for eigenvalue " +
                                              std::to_string(t) + " in code " + entry.code.str());
                if (disc < 1e-9 * scale) disc = 0.0;  // double root within noise
                double sq = std::sqrt(disc);
                roots.push_back((-b + sq) / (2.0 * a));
                roots.push_back((-b - sq) / (2.0 * a));
            }
            out.per_eigenvalue.push_back(roots);
            for (double v : roots) pool.push_back(v);
        }
    }

    for (const auto& [value, count] : debts) {
        for (long long k = 0; k < count; ++k) {
            size_t best = pool.size();
            double best_dev = 0;
            for (size_t i = 0; i < pool.size(); ++i) {
                double d = std::fabs(pool[i] - value);
                if (best == pool.size() || d < best_dev) {
                    best = i;
                    best_dev = d;
                }
            }
            if (best == pool.size() || best_dev > std::max(tol, 1e-9))
                throw cancellation_error("fixed root " + std::to_string(value) +
                                         " with negative multiplicity has no matching "
                                         "per-eigenvalue root in code " +
                                         entry.code.str());
            pool.erase(pool.begin() + static_cast<long>(best));
        }
    }

    std::vector<double> all = pool;
    for (const auto& [value, count] : out.fixed)
        for (long long k = 0; k < count; ++k) all.push_back(value);
    if (static_cast<long long>(all.size()) != n + m)
        throw std::logic_error("predicted spectrum has wrong size for code " + entry.code.str());
    out.spectrum = Spectrum::from_values(std::move(all));
    return out;
}

Rational eval_L_exact(const FormulaEntry& entry, const IntPoly& charpoly_G, long long n,
                      long long m, long long r, const Rational& lambda0) {
    Rational val = 1;
    for (const auto& sf : entry.scalars) {
        BigInt root = sf.root.eval(n, m, r);
        long long mult = sf.mult.eval(n, m, r).convert_to<long long>();
        if (mult == 0) continue;
        Rational factor = lambda0 - Rational(root);
        if (factor == 0 && mult < 0)
            throw pole_error("evaluation point hits a pole of code " + entry.code.str());
        val *= pow_rational(factor, mult);
    }
    if (entry.eigen_deg > 0 && n > 1) {
        IntPoly p = charpoly_G.div_exact(IntPoly::monomial(1, 1));
        // Q(t) = F(lambda0, t) with rational coefficients; scale to integers.
        Rational qc[3] = {Rational(0), Rational(0), Rational(0)};
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= entry.eigen_deg; ++j)
                if (!entry.f[j][k].is_zero())
                    qc[k] += Rational(entry.f[j][k].eval(n, m, r)) * pow_rational(lambda0, j);
        BigInt den = 1;
        for (int k = 0; k <= 2; ++k) den = lcm(den, denominator(qc[k]));
        std::vector<BigInt> q_coeffs;
        for (int k = 0; k <= 2; ++k) q_coeffs.push_back(numerator(qc[k] * Rational(den)));
        IntPoly q(std::move(q_coeffs));
        if (q.is_zero()) return Rational(0);
        val *= Rational(resultant(p, q)) / pow_rational(Rational(den), n - 1);
    }
    return val;
}

BigInt eval_trees(const FormulaEntry& entry, const IntPoly& charpoly_G, long long n,
                  long long m, long long r) {
    if (entry.code.z == Letter::Zero) return 0;
    Rational acc = 1;
    for (const auto& sf : entry.scalars) {
        BigInt root = sf.root.eval(n, m, r);
        long long mult = sf.mult.eval(n, m, r).convert_to<long long>();
        if (mult == 0) continue;
        if (root == 0) {
            if (mult < 0) throw pole_error("zero root with negative multiplicity");
            if (mult > 1) return 0;  // extra zero eigenvalue: disconnected
            continue;                // the canonical lambda factor
        }
        acc *= pow_rational(Rational(root), mult);
    }
    if (entry.eigen_deg > 0 && n > 1) {
        IntPoly p = charpoly_G.div_exact(IntPoly::monomial(1, 1));
        IntPoly g = entry.tree_g(n, m, r);
        if (g.is_zero()) return 0;
        acc *= Rational(resultant(p, g));
    }
    acc /= Rational(n + m);
    if (!is_integer(acc))
        throw non_integer_result_error("tree formula for " + entry.code.str() +
                                       " did not produce an integer");
    BigInt trees = numerator(acc);
    if (trees < 0)
        throw non_integer_result_error("tree formula for " + entry.code.str() +
                                       " produced a negative value");
    return trees;
}

std::vector<SeriesOp> parse_series(const std::string& s) {
    std::vector<SeriesOp> ops;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok == "c")
            ops.push_back(SeriesOp::Complement);
        else if (tok == "l")
            ops.push_back(SeriesOp::Line);
        else if (tok == "+++")
            ops.push_back(SeriesOp::TotalPlus);
        else if (tok == "---")
            ops.push_back(SeriesOp::TotalMinus);
        else
            throw std::invalid_argument("unknown series operation '" + tok +
                                        "' (expected c, l, +++, ---)");
    }
    return ops;
}

std::string series_op_name(SeriesOp op) {
    switch (op) {
        case SeriesOp::Complement: return "c";
        case SeriesOp::Line: return "l";
        case SeriesOp::TotalPlus: return "+++";
        case SeriesOp::TotalMinus: return "---";
    }
    return "?";
}

SeriesState apply_operation_series(SeriesState st, const std::vector<SeriesOp>& ops, double tol) {
    for (SeriesOp op : ops) {
        if (static_cast<long long>(st.sp.values.size()) != st.n)
            throw std::invalid_argument("series state spectrum size mismatch");
        const long long n = st.n, r = st.r;
        if (n * r % 2 != 0) throw std::invalid_argument("n*r must be even for a graph");
        const long long m = n * r / 2;
        switch (op) {
            case SeriesOp::Complement: {
                if (n - 1 - r < 1)
                    throw degenerate_degree_error("complement drops regularity below 1");
                std::vector<double> vals;
                for (long long i = 0; i + 1 < n; ++i)
                    vals.push_back(static_cast<double>(n) - st.sp.values[i]);
                vals.push_back(0.0);
                st.sp = Spectrum::from_values(std::move(vals));
                st.r = n - 1 - r;
                break;
            }
            case SeriesOp::Line: {
                if (2 * r - 2 < 1)
                    throw degenerate_degree_error("line graph of a 1-regular graph is 0-regular");
                std::vector<double> vals = st.sp.values;
                for (long long k = 0; k < m - n; ++k) vals.push_back(2.0 * static_cast<double>(r));
                st.sp = Spectrum::from_values(std::move(vals));
                st.n = m;
                st.r = 2 * r - 2;
                break;
            }
            case SeriesOp::TotalPlus: {
                auto pred = predict_spectrum(registry(XyzCode::parse("+++")), n, m, r, st.sp, tol);
                st.sp = pred.spectrum;
                st.n = n + m;
                st.r = 2 * r;
                break;
            }
            case SeriesOp::TotalMinus: {
                if (n + m - 2 * r - 1 < 1)
                    throw degenerate_degree_error("(---) drops regularity below 1");
                auto pred = predict_spectrum(registry(XyzCode::parse("---")), n, m, r, st.sp, tol);
                st.sp = pred.spectrum;
                st.n = n + m;
                st.r = n + m - 2 * r - 1;
                break;
            }
        }
    }
    return st;
}

std::string entry_to_json(const FormulaEntry& entry) {
    nlohmann::json j;
    j["code"] = entry.code.str();
    j["scalars"] = nlohmann::json::array();
    for (const auto& sf : entry.scalars)
        j["scalars"].push_back({{"root", sf.root.str()}, {"mult", sf.mult.str()}});
    j["eigen_factor"]["degree"] = entry.eigen_deg;
    auto terms = nlohmann::json::array();
    for (int jj = 0; jj <= 2; ++jj)
        for (int k = 0; k <= 2; ++k)
            if (!entry.f[jj][k].is_zero())
                terms.push_back({{"lambda", jj}, {"t", k}, {"coef", entry.f[jj][k].str()}});
    j["eigen_factor"]["terms"] = terms;
    if (entry.code.z == Letter::Zero) {
        j["trees"] = {{"zero", true}};
    } else {
        nlohmann::json t;
        t["zero"] = false;
        t["prefactor"] = nlohmann::json::array();
        for (const auto& sf : entry.scalars)
            if (!sf.root.is_zero())
                t["prefactor"].push_back({{"base", sf.root.str()}, {"exp", sf.mult.str()}});
        t["divisor"] = "n + m";
        auto g = nlohmann::json::array();
        long long sign = entry.eigen_deg % 2 != 0 ? -1 : 1;
        for (int k = 0; k <= 2; ++k) {
            NmrPoly gk = sign < 0 ? -entry.f[0][k] : entry.f[0][k];
            if (!gk.is_zero()) g.push_back({{"t", k}, {"coef", gk.str()}});
        }
        t["g"] = g;
        j["trees"] = t;
    }
    return j.dump();
}

std::string registry_to_json() {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& code : all_codes()) {
        if (!first) os << ",\n ";
        os << entry_to_json(registry(code));
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace xyz
