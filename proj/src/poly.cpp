#include "xyz/poly.hpp"

#include <sstream>

namespace xyz {

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(BigInt a, int k) {
    IntPoly p;
    if (a != 0) {
        p.c.assign(k + 1, BigInt(0));
        p.c[k] = std::move(a);
    }
    return p;
}

IntPoly IntPoly::linear_root(const BigInt& a) {
    IntPoly p;
    p.c = {-a, BigInt(1)};
    return p;
}

const BigInt& IntPoly::coeff(int k) const {
    static const BigInt zero = 0;
    if (k < 0 || k >= static_cast<int>(c.size())) return zero;
    return c[k];
}

BigInt IntPoly::leading() const { return c.empty() ? BigInt(0) : c.back(); }

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::compose_linear(const BigInt& b0, const BigInt& b1) const {
    // Horner in the substituted variable.
    IntPoly lin;
    lin.c = {b0, b1};
    lin.trim();
    IntPoly acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly out;
    out.c.resize(std::max(c.size(), o.c.size()), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
    out.trim();
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& v : out.c) v = -v;
    return out;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    IntPoly out;
    out.c.assign(c.size() + o.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
    }
    out.trim();
    return out;
}

IntPoly IntPoly::div_exact(const IntPoly& den) const {
    if (den.is_zero()) throw inexact_division_error("division by zero polynomial");
    IntPoly rem = *this;
    if (rem.is_zero()) return zero();
    if (rem.degree() < den.degree())
        throw inexact_division_error("quotient degree would be negative");
    IntPoly quot;
    quot.c.assign(rem.degree() - den.degree() + 1, BigInt(0));
    const BigInt& lead = den.c.back();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        BigInt top = rem.c.back();
        if (top % lead != 0) throw inexact_division_error("leading coefficient not divisible");
        BigInt q = top / lead;
        int shift = rem.degree() - den.degree();
        quot.c[shift] = q;
        for (int i = 0; i <= den.degree(); ++i) rem.c[shift + i] -= q * den.c[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw inexact_division_error("nonzero remainder");
    quot.trim();
    return quot;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& a = c[k];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        BigInt mag = a < 0 ? BigInt(-a) : a;
        if (mag != 1 || k == 0) os << mag;
        if (k > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Bareiss elimination on a plain coefficient table.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? BigInt(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace

BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw zero_polynomial_error("resultant of zero polynomial");
    const int dp = p.degree(), dq = q.degree();
    if (dp == 0) return pow_bigint(p.c[0], dq);
    if (dq == 0) return pow_bigint(q.c[0], dp);
    const int size = dp + dq;
    std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size, BigInt(0)));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k) syl[row][row + k] = p.c[dp - k];
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k) syl[dq + row][row + k] = q.c[dq - k];
    return bareiss_det(std::move(syl));
}

}  // namespace xyz
