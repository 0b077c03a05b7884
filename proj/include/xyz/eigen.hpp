#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "xyz/matrix.hpp"

namespace xyz {

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Real eigenvalues sorted descending, one entry per multiplicity, so
// values.size() equals the matrix dimension.
struct Spectrum {
    std::vector<double> values;

    static Spectrum from_values(std::vector<double> v);  // sorts descending

    int size() const { return static_cast<int>(values.size()); }

    // Merge into (value, multiplicity) clusters: consecutive entries closer
    // than gap belong to one cluster; value is the cluster mean.
    std::vector<std::pair<double, int>> clusters(double gap = 1e-7) const;

    // Multiplicity of eigenvalue v up to absolute tolerance.
    int count_near(double v, double tol = 1e-7) const;
};

// Max |a_i - b_i| over the descending-sorted pairing; infinity on size mismatch.
double max_pairwise_dev(const Spectrum& a, const Spectrum& b);

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol; throws convergence_error after a bounded sweep count.
Spectrum jacobi_eigenvalues(std::vector<std::vector<double>> a, double tol = 1e-12);

// Requires an exactly symmetric matrix.
Spectrum symmetric_eigenvalues(const IntMatrix& mat, double tol = 1e-12);

}  // namespace xyz
