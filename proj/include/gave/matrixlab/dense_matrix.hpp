#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gave/matrixlab/vector_ops.hpp"

namespace gave {

/// Row-major dense matrix used for small analysis problems (certificates,
/// enumeration oracle).
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    [[nodiscard]] static DenseMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    void multiply(std::span<const double> x, std::span<double> y) const;
    [[nodiscard]] Vector multiply(std::span<const double> x) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Solves M x = b by Gaussian elimination with partial pivoting.
/// Returns false (leaving x unspecified) when a pivot is exactly zero or
/// below `pivot_floor` times the largest entry of M.
[[nodiscard]] bool dense_solve(DenseMatrix m, std::span<const double> b, std::span<double> x,
                               double pivot_floor = 1e-14);

}  // namespace gave
