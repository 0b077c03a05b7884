#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xyz/bigint.hpp"

namespace xyz {

struct inexact_division_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct zero_polynomial_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Univariate polynomial with exact integer coefficients, ascending order.
// The zero polynomial has an empty coefficient vector (degree -1).
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(BigInt v);
    // monomial a*x^k
    static IntPoly monomial(BigInt a, int k);
    // x - a
    static IntPoly linear_root(const BigInt& a);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const BigInt& coeff(int k) const;
    BigInt leading() const;

    void trim();

    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;

    // p(b0 + b1*x), used to realize substitutions like L(n - lambda, G).
    IntPoly compose_linear(const BigInt& b0, const BigInt& b1) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c == o.c; }

    // Exact quotient; throws inexact_division_error if den does not divide
    // this with an integer-coefficient quotient and zero remainder.
    IntPoly div_exact(const IntPoly& den) const;

    std::string str(const std::string& var = "x") const;
};

// Sylvester-matrix resultant. Convention pinned by tests:
//   res(p, q) = lc(p)^deg(q) * prod q(alpha_i) over the roots alpha_i of p,
// so res(t-2, t-3) = -1. Throws zero_polynomial_error if either input is 0.
BigInt resultant(const IntPoly& p, const IntPoly& q);

}  // namespace xyz
