#include "gave/matrixlab/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gave/error.hpp"
#include "gave/matrixlab/dense_matrix.hpp"

namespace gave {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
    for (const auto& t : entries) {
        if (t.row >= rows || t.col >= cols) {
            throw Error(ErrorCode::DimensionMismatch,
                        "triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m(rows, cols);
    m.col_idx_.reserve(entries.size());
    m.values_.reserve(entries.size());
    std::size_t k = 0;
    while (k < entries.size()) {
        const std::size_t r = entries[k].row;
        const std::size_t c = entries[k].col;
        double v = 0.0;
        for (; k < entries.size() && entries[k].row == r && entries[k].col == c; ++k) {
            v += entries[k].value;
        }
        if (v != 0.0) {
            m.col_idx_.push_back(c);
            m.values_.push_back(v);
            ++m.row_ptr_[r + 1];
        }
    }
    for (std::size_t i = 0; i < rows; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
    return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n, double scale) {
    Vector d(n, scale);
    return diagonal(d);
}

SparseMatrix SparseMatrix::diagonal(std::span<const double> d) {
    std::vector<Triplet> t;
    t.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) t.push_back({i, i, d[i]});
    return from_triplets(d.size(), d.size(), std::move(t));
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& dense) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < dense.rows(); ++i) {
        for (std::size_t j = 0; j < dense.cols(); ++j) {
            if (dense(i, j) != 0.0) t.push_back({i, j, dense(i, j)});
        }
    }
    return from_triplets(dense.rows(), dense.cols(), std::move(t));
}

double SparseMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::DimensionMismatch, "index out of range");
    const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
    const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
    const auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) return 0.0;
    return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

Vector SparseMatrix::diagonal_values() const {
    Vector d(std::min(rows_, cols_), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
    return d;
}

std::vector<SparseMatrix::Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
            t.push_back({i, col_idx_[p], values_[p]});
        }
    }
    return t;
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != cols_ || y.size() != rows_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) s += values_[p] * x[col_idx_[p]];
        y[i] = s;
    }
}

Vector SparseMatrix::multiply(std::span<const double> x) const {
    Vector y(rows_);
    multiply(x, y);
    return y;
}

Vector SparseMatrix::multiply_transpose(std::span<const double> x) const {
    if (x.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "transposed product");
    Vector y(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) y[col_idx_[p]] += values_[p] * x[i];
    }
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    t.col_idx_.resize(nnz());
    t.values_.resize(nnz());
    for (std::size_t c : col_idx_) ++t.row_ptr_[c + 1];
    for (std::size_t j = 0; j < cols_; ++j) t.row_ptr_[j + 1] += t.row_ptr_[j];
    std::vector<std::size_t> next(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
            const std::size_t q = next[col_idx_[p]]++;
            t.col_idx_[q] = i;
            t.values_[q] = values_[p];
        }
    }
    return t;
}

SparseMatrix SparseMatrix::abs() const {
    SparseMatrix m = *this;
    for (double& v : m.values_) v = std::fabs(v);
    return m;
}

SparseMatrix SparseMatrix::scaled(double c) const {
    if (c == 0.0) return SparseMatrix(rows_, cols_);
    SparseMatrix m = *this;
    for (double& v : m.values_) v *= c;
    return m;
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix d(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) d(i, col_idx_[p]) = values_[p];
    }
    return d;
}

double SparseMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

double SparseMatrix::norm_inf() const noexcept {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) s += std::fabs(values_[p]);
        m = std::max(m, s);
    }
    return m;
}

bool SparseMatrix::is_diagonal() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
            if (col_idx_[p] != i) return false;
        }
    }
    return true;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, double alpha, double beta) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum of differently shaped operands");
    }
    std::vector<SparseMatrix::Triplet> t;
    t.reserve(a.nnz() + b.nnz());
    const auto ap = a.row_ptr();
    const auto ac = a.col_idx();
    const auto av = a.values();
    const auto bp = b.row_ptr();
    const auto bc = b.col_idx();
    const auto bv = b.values();
    // row-wise merge; a stored entry without a partner keeps alpha*a exactly
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::size_t p = ap[i];
        std::size_t q = bp[i];
        while (p < ap[i + 1] || q < bp[i + 1]) {
            if (q == bp[i + 1] || (p < ap[i + 1] && ac[p] < bc[q])) {
                t.push_back({i, ac[p], alpha * av[p]});
                ++p;
            } else if (p == ap[i + 1] || bc[q] < ac[p]) {
                t.push_back({i, bc[q], beta * bv[q]});
                ++q;
            } else {
                t.push_back({i, ac[p], alpha * av[p] + beta * bv[q]});
                ++p;
                ++q;
            }
        }
    }
    return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return add(a, b, 1.0, 1.0); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return add(a, b, 1.0, -1.0); }
SparseMatrix operator*(double c, const SparseMatrix& m) { return m.scaled(c); }

Splitting split(const SparseMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "splitting needs a square matrix");
    std::vector<SparseMatrix::Triplet> d;
    std::vector<SparseMatrix::Triplet> l;
    std::vector<SparseMatrix::Triplet> u;
    for (const auto& t : m.triplets()) {
        if (t.row == t.col) {
            d.push_back(t);
        } else if (t.row > t.col) {
            l.push_back({t.row, t.col, -t.value});
        } else {
            u.push_back({t.row, t.col, -t.value});
        }
    }
    const std::size_t n = m.rows();
    return {SparseMatrix::from_triplets(n, n, std::move(d)), SparseMatrix::from_triplets(n, n, std::move(l)),
            SparseMatrix::from_triplets(n, n, std::move(u))};
}

SparseMatrix reconstruct(const Splitting& s) { return s.diagonal - s.lower - s.upper; }

}  // namespace gave
