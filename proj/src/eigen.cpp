#include "xyz/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace xyz {

Spectrum Spectrum::from_values(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum{std::move(v)};
}

std::vector<std::pair<double, int>> Spectrum::clusters(double gap) const {
    std::vector<std::pair<double, int>> out;
    size_t i = 0;
    while (i < values.size()) {
        size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j - 1] - values[j] < gap) {
            sum += values[j];
            ++j;
        }
        out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return out;
}

int Spectrum::count_near(double v, double tol) const {
    int count = 0;
    for (double x : values)
        if (std::fabs(x - v) <= tol) ++count;
    return count;
}

double max_pairwise_dev(const Spectrum& a, const Spectrum& b) {
    if (a.values.size() != b.values.size()) return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i)
        dev = std::max(dev, std::fabs(a.values[i] - b.values[i]));
    return dev;
}

Spectrum jacobi_eigenvalues(std::vector<std::vector<double>> a, double tol) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return Spectrum{};
    const int max_sweeps = 100;
    auto off_norm2 = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
        return s;
    };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_norm2() <= tol * tol) {
            std::vector<double> ev(n);
            for (int i = 0; i < n; ++i) ev[i] = a[i][i];
            return Spectrum::from_values(std::move(ev));
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (apq == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
                    a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
                }
            }
        }
    }
    throw convergence_error("jacobi sweep limit exceeded");
}

Spectrum symmetric_eigenvalues(const IntMatrix& mat, double tol) {
    if (!mat.is_symmetric()) throw std::invalid_argument("matrix not symmetric");
    const int n = mat.rows();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = to_double(mat.at(i, j));
    return jacobi_eigenvalues(std::move(a), tol);
}

}  // namespace xyz
