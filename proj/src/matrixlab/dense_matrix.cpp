#include "gave/matrixlab/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gave/error.hpp"

namespace gave {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void DenseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != cols_ || y.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "dense product");
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto r = row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += r[j] * x[j];
        y[i] = s;
    }
}

Vector DenseMatrix::multiply(std::span<const double> x) const {
    Vector y(rows_);
    multiply(x, y);
    return y;
}

bool dense_solve(DenseMatrix m, std::span<const double> b, std::span<double> x, double pivot_floor) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n || x.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "dense solve");
    }
    double scale = 0.0;
    for (double v : m.data()) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return n == 0;

    std::copy(b.begin(), b.end(), x.begin());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
        }
        if (std::fabs(m(piv, k)) <= pivot_floor * scale) return false;
        if (piv != k) {
            std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(piv).begin());
            std::swap(x[k], x[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            x[i] -= f * x[k];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        double s = x[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= m(k, j) * x[j];
        x[k] = s / m(k, k);
    }
    return true;
}

}  // namespace gave
