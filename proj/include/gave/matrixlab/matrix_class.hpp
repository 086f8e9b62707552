#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gave/matrixlab/sparse_matrix.hpp"

namespace gave {

/// <M>: |m_ii| on the diagonal, -|m_ij| elsewhere.
[[nodiscard]] SparseMatrix comparison_matrix(const SparseMatrix& m);

/// Outcome of a matrix-class test with the evidence behind it.
struct MatrixVerdict {
    bool holds = false;
    std::string reason;
    /// Spectral radius of the Jacobi matrix I - D^{-1} M when it was computed.
    std::optional<double> jacobi_radius;
    /// Offending entry for structural failures.
    std::optional<std::size_t> row;
    std::optional<std::size_t> col;
    std::optional<double> value;
};

[[nodiscard]] MatrixVerdict is_z_matrix(const SparseMatrix& m);

/// Nonsingular M-matrix test: Z-matrix, strictly positive diagonal and
/// rho(I - D^{-1} M) < 1.
[[nodiscard]] MatrixVerdict is_m_matrix(const SparseMatrix& m);

/// H+ test: strictly positive diagonal and <M> a nonsingular M-matrix.
[[nodiscard]] MatrixVerdict is_h_plus_matrix(const SparseMatrix& m);

}  // namespace gave
