#include "xyz/matrix.hpp"

namespace xyz {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix id(n, n);
    for (int i = 0; i < n; ++i) id.at(i, i) = 1;
    return id;
}

IntMatrix IntMatrix::ones(int rows, int cols) {
    IntMatrix j(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) j.at(i, k) = 1;
    return j;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

BigInt IntMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    BigInt t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch in matrix sum");
    IntMatrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch in matrix difference");
    IntMatrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

IntMatrix IntMatrix::scaled(const BigInt& k) const {
    IntMatrix out = *this;
    for (auto& v : out.a_) v *= k;
    return out;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix adjacency(const Graph& g) {
    IntMatrix a(g.n(), g.n());
    for (const auto& [u, v] : g.edges()) {
        a.at(u, v) = 1;
        a.at(v, u) = 1;
    }
    return a;
}

IntMatrix degree_matrix(const Graph& g) {
    IntMatrix d(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i) d.at(i, i) = g.degree(i);
    return d;
}

IntMatrix laplacian(const Graph& g) {
    IntMatrix l(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i) l.at(i, i) = g.degree(i);
    for (const auto& [u, v] : g.edges()) {
        l.at(u, v) = -1;
        l.at(v, u) = -1;
    }
    return l;
}

IntMatrix incidence(const Graph& g) {
    IntMatrix q(g.n(), g.m());
    for (int j = 0; j < g.m(); ++j) {
        q.at(g.edges()[j].first, j) = 1;
        q.at(g.edges()[j].second, j) = 1;
    }
    return q;
}

BigInt det_exact(const IntMatrix& mat) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = mat.rows();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = mat.at(i, j);
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

IntPoly char_poly_exact(const IntMatrix& mat) {
    if (mat.rows() != mat.cols())
        throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const int n = mat.rows();
    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = 1;
    // Faddeev-LeVerrier: the division by k is exact over the integers.
    IntMatrix m = IntMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        IntMatrix am = mat * m;
        BigInt ck = -am.trace() / k;
        coeffs[n - k] = ck;
        m = am;
        for (int i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return IntPoly(std::move(coeffs));
}

BigInt char_poly_at(const IntMatrix& mat, const BigInt& lambda0) {
    const int n = mat.rows();
    IntMatrix shifted(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            shifted.at(i, j) = (i == j ? lambda0 - mat.at(i, j) : BigInt(-mat.at(i, j)));
    return det_exact(shifted);
}

BigInt matrix_tree_count(const Graph& g) {
    if (g.n() == 0) return 0;
    if (g.n() == 1) return 1;
    IntMatrix reduced(g.n() - 1, g.n() - 1);
    IntMatrix l = laplacian(g);
    for (int i = 1; i < g.n(); ++i)
        for (int j = 1; j < g.n(); ++j) reduced.at(i - 1, j - 1) = l.at(i, j);
    return det_exact(reduced);
}

}  // namespace xyz
