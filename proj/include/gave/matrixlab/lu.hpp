#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gave/matrixlab/sparse_matrix.hpp"

namespace gave {

enum class PivotPolicy {
    /// largest magnitude in the column
    partial,
    /// keep the diagonal whenever it is nonzero (used for definiteness checks)
    diagonal,
};

/// Sparse LU factors P M = L U in compressed column form.
///
/// L is unit lower triangular (unit diagonal stored first in each column),
/// U is upper triangular (diagonal stored last in each column). The row
/// permutation comes from partial pivoting; columns are not reordered.
/// Read-only after construction, so concurrent solves are safe.
class LuFactorization {
public:
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t nnz_lower() const noexcept { return l_val_.size(); }
    [[nodiscard]] std::size_t nnz_upper() const noexcept { return u_val_.size(); }

    /// Diagonal of U in elimination order.
    [[nodiscard]] Vector pivots() const;
    /// pinv[i] = position of original row i after pivoting.
    [[nodiscard]] std::span<const std::size_t> row_permutation() const noexcept { return pinv_; }

    /// Solves M y = r.
    [[nodiscard]] Vector solve(std::span<const double> r) const;
    void solve_in_place(std::span<double> r) const;
    /// Solves M^T y = r.
    [[nodiscard]] Vector solve_transposed(std::span<const double> r) const;

private:
    friend LuFactorization lu_factorize(const SparseMatrix& m, PivotPolicy policy);

    std::size_t n_ = 0;
    std::vector<std::size_t> pinv_;
    std::vector<std::size_t> l_ptr_, l_idx_;
    std::vector<double> l_val_;
    std::vector<std::size_t> u_ptr_, u_idx_;
    std::vector<double> u_val_;
};

/// Left-looking (Gilbert-Peierls) sparse LU with row pivoting.
///
/// Throws SingularMatrix when the best available pivot magnitude is below
/// 1e-14 times the largest absolute entry of `m`.
[[nodiscard]] LuFactorization lu_factorize(const SparseMatrix& m,
                                           PivotPolicy policy = PivotPolicy::partial);

/// Throws DimensionMismatch when r does not match the factor size.
[[nodiscard]] Vector solve_factored(const LuFactorization& f, std::span<const double> r);

}  // namespace gave
