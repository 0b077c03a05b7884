#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "xyz/bigint.hpp"
#include "xyz/eigen.hpp"
#include "xyz/poly.hpp"
#include "xyz/transform.hpp"

namespace xyz {

struct cancellation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct complex_roots_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct non_integer_result_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degenerate_degree_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer-coefficient polynomial in the symbols n, m, r. s = n + m is
// derived at evaluation, never an independent symbol.
struct NmrPoly {
    // exponents (n, m, r) -> coefficient
    std::map<std::array<int, 3>, long long> terms;

    static NmrPoly c(long long k);
    static NmrPoly n();
    static NmrPoly m();
    static NmrPoly r();
    static NmrPoly s();  // n + m

    bool is_zero() const { return terms.empty(); }
    NmrPoly operator+(const NmrPoly& o) const;
    NmrPoly operator-(const NmrPoly& o) const;
    NmrPoly operator*(const NmrPoly& o) const;
    NmrPoly operator-() const;
    bool operator==(const NmrPoly& o) const { return terms == o.terms; }

    BigInt eval(long long n, long long m, long long r) const;
    std::string str() const;
};

// (lambda - root)^mult; mult may evaluate negative (m-n for r=1 graphs),
// in which case the factor lives in a denominator and exactness is asserted.
struct ScalarFactor {
    NmrPoly root;
    NmrPoly mult;
};

// One canonical table row: L(lambda, G^xyz) =
//   prod scalars (lambda-root)^mult * prod_{i=1}^{n-1} F(lambda, lambda_i),
// with F monic in lambda of degree eigen_deg (0 = no per-eigenvalue factor).
struct FormulaEntry {
    XyzCode code;
    std::vector<ScalarFactor> scalars;
    int eigen_deg = 0;
    // F(lambda, t) = sum_{j,k} f[j][k] lambda^j t^k
    std::array<std::array<NmrPoly, 3>, 3> f{};

    // Per-eigenvalue root-product polynomial g(t) = (-1)^eigen_deg F(0, t):
    // the product of the roots F(., t) contributes; drives the tree count.
    IntPoly tree_g(long long n, long long m, long long r) const;
};

// The canonical entry for one of the 64 codes.
const FormulaEntry& registry(XyzCode code);

struct PredictedSpectrum {
    // resolved fixed eigenvalues (value, multiplicity > 0)
    std::vector<std::pair<double, long long>> fixed;
    // roots of F(., lambda_i) per i = 1..n-1 (before cancellation)
    std::vector<std::vector<double>> per_eigenvalue;
    // all n+m values, descending
    Spectrum spectrum;
};

// Spectrum of G^xyz from the entry and Sp(G). sp must hold n values with the
// smallest ~ 0. Negative fixed multiplicities are cancelled against matching
// per-eigenvalue roots within tol (cancellation_error if absent); quadratic
// discriminants below -tol*scale raise complex_roots_error.
PredictedSpectrum predict_spectrum(const FormulaEntry& entry, long long n, long long m,
                                   long long r, const Spectrum& sp, double tol = 1e-8);

// Exact value of L(lambda0, G^xyz) claimed by the formula; charpoly_G is the
// monic Laplacian characteristic polynomial of G (divisible by its variable).
Rational eval_L_exact(const FormulaEntry& entry, const IntPoly& charpoly_G, long long n,
                      long long m, long long r, const Rational& lambda0);

// Exact spanning-tree count claimed by the formula (0 for z = 0).
BigInt eval_trees(const FormulaEntry& entry, const IntPoly& charpoly_G, long long n,
                  long long m, long long r);

// Remark-style operation series on regular spectra.
enum class SeriesOp { Complement, Line, TotalPlus, TotalMinus };

std::vector<SeriesOp> parse_series(const std::string& s);  // "c,l,+++,---"
std::string series_op_name(SeriesOp op);

struct SeriesState {
    long long n = 0;
    long long r = 0;
    Spectrum sp;
};

// Applies complement / line / (+++) / (---) steps to (n, r, Sp); throws
// degenerate_degree_error when an intermediate degree drops below 1.
SeriesState apply_operation_series(SeriesState start, const std::vector<SeriesOp>& ops,
                                   double tol = 1e-8);

// Machine-readable catalog record for one entry (and the whole registry).
std::string entry_to_json(const FormulaEntry& entry);
std::string registry_to_json();

}  // namespace xyz
