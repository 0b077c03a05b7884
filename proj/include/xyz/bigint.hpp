#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace xyz {

// Exact arbitrary-precision scalars. Rational is always normalized
// (positive denominator, reduced) by the adaptor.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_bigint(const BigInt& base, unsigned long long exp) {
    BigInt result = 1, b = base;
    while (exp) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

// base^exp for signed exp; exp < 0 requires base != 0.
inline Rational pow_rational(const Rational& base, long long exp) {
    if (exp >= 0) {
        Rational result = 1, b = base;
        unsigned long long e = static_cast<unsigned long long>(exp);
        while (e) {
            if (e & 1) result *= b;
            b *= b;
            e >>= 1;
        }
        return result;
    }
    return 1 / pow_rational(base, -exp);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace xyz
