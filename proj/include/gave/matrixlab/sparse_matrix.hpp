#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gave/matrixlab/vector_ops.hpp"

namespace gave {

class DenseMatrix;

/// Compressed sparse row matrix.
///
/// Column indices are strictly increasing within each row and no explicit
/// zeros are stored. Instances are immutable once built; all arithmetic
/// returns new matrices.
class SparseMatrix {
public:
    struct Triplet {
        std::size_t row;
        std::size_t col;
        double value;
    };

    SparseMatrix() = default;
    /// All-zero matrix of the given shape.
    SparseMatrix(std::size_t rows, std::size_t cols);

    /// Duplicates are summed; entries that sum to zero are dropped.
    [[nodiscard]] static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                                    std::vector<Triplet> entries);
    [[nodiscard]] static SparseMatrix identity(std::size_t n, double scale = 1.0);
    [[nodiscard]] static SparseMatrix diagonal(std::span<const double> d);
    [[nodiscard]] static SparseMatrix from_dense(const DenseMatrix& dense);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t nnz() const noexcept { return values_.size(); }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
    [[nodiscard]] std::span<const std::size_t> col_idx() const noexcept { return col_idx_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    /// Entry (i, j); zero when not stored.
    [[nodiscard]] double at(std::size_t i, std::size_t j) const;
    [[nodiscard]] Vector diagonal_values() const;
    [[nodiscard]] std::vector<Triplet> triplets() const;

    /// y = M x
    void multiply(std::span<const double> x, std::span<double> y) const;
    [[nodiscard]] Vector multiply(std::span<const double> x) const;
    /// y = M^T x
    [[nodiscard]] Vector multiply_transpose(std::span<const double> x) const;

    [[nodiscard]] SparseMatrix transpose() const;
    [[nodiscard]] SparseMatrix abs() const;
    [[nodiscard]] SparseMatrix scaled(double c) const;
    [[nodiscard]] DenseMatrix to_dense() const;

    [[nodiscard]] double max_abs() const noexcept;
    [[nodiscard]] double norm_inf() const noexcept;
    [[nodiscard]] bool is_diagonal() const noexcept;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

/// alpha * a + beta * b
[[nodiscard]] SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, double alpha = 1.0,
                               double beta = 1.0);
[[nodiscard]] SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
[[nodiscard]] SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
[[nodiscard]] SparseMatrix operator*(double c, const SparseMatrix& m);

/// A = D - L - U with D diagonal, L strictly lower and U strictly upper.
/// L and U hold the negated triangular parts so the identity is exact.
struct Splitting {
    SparseMatrix diagonal;
    SparseMatrix lower;
    SparseMatrix upper;
};

[[nodiscard]] Splitting split(const SparseMatrix& m);
[[nodiscard]] SparseMatrix reconstruct(const Splitting& s);

}  // namespace gave
