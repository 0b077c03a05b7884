#pragma once

#include <stdexcept>
#include <vector>

#include "xyz/bigint.hpp"
#include "xyz/graph.hpp"
#include "xyz/poly.hpp"

namespace xyz {

// Dense matrix of exact integers. Spectral operations require square input;
// incidence matrices are the rectangular exception.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix ones(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    BigInt trace() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(const BigInt& k) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_symmetric() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

IntMatrix adjacency(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
IntMatrix laplacian(const Graph& g);   // D - A: symmetric, zero row sums
IntMatrix incidence(const Graph& g);   // n x m, entries in {0,1}, column sums 2

// Bareiss fraction-free elimination; exact.
BigInt det_exact(const IntMatrix& mat);

// Fraction-free Faddeev-LeVerrier; monic char poly det(lambda*I - M).
IntPoly char_poly_exact(const IntMatrix& mat);

// det(lambda0*I - M) for a quick one-point evaluation.
BigInt char_poly_at(const IntMatrix& mat, const BigInt& lambda0);

// Number of spanning trees: any cofactor of the Laplacian (row/col 0 here).
BigInt matrix_tree_count(const Graph& g);

}  // namespace xyz
