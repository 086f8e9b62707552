#pragma once

#include <cstddef>

#include "gave/matrixlab/dense_matrix.hpp"
#include "gave/matrixlab/lu.hpp"
#include "gave/matrixlab/sparse_matrix.hpp"

namespace gave {

/// Result of an iterative spectral estimate. When `converged` is false the
/// value is the best estimate available at the iteration cap.
struct SpectralEstimate {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
    /// True when the value came from the dense eigensolver fallback.
    bool dense_fallback = false;
};

inline constexpr std::size_t kPowerIterationCap = 10'000;
inline constexpr double kPowerIterationTol = 1e-10;
inline constexpr std::size_t kDenseFallbackLimit = 64;

/// Spectral radius of an entrywise nonnegative square matrix.
///
/// Power iteration from the all-ones vector. Stops early when the
/// Collatz-Wielandt bounds min_i (Mx)_i/x_i <= rho <= max_i (Mx)_i/x_i
/// pinch together; otherwise on stagnation of the norm ratio. For n <= 64
/// an uncertified estimate is replaced by a dense eigenvalue solve.
/// Throws NonNegativityViolation on a negative entry.
[[nodiscard]] SpectralEstimate spectral_radius(const SparseMatrix& m);
[[nodiscard]] SpectralEstimate spectral_radius(const DenseMatrix& m);

/// ||M||_2 by power iteration on M^T M.
[[nodiscard]] SpectralEstimate two_norm(const SparseMatrix& m);

/// ||M^{-1}||_2 = 1 / sigma_min(M) by power iteration on M^{-T} M^{-1}.
[[nodiscard]] SpectralEstimate inverse_two_norm(const LuFactorization& factors);

/// Smallest eigenvalue of a symmetric positive definite matrix by inverse
/// power iteration. Throws NotSymmetric when |m_ij - m_ji| exceeds 1e-12
/// (relative to max(1, max|m_ij|)) and NotPositiveDefinite when elimination
/// without pivoting meets a nonpositive pivot.
[[nodiscard]] SpectralEstimate smallest_eigenvalue_spd(const SparseMatrix& m);

[[nodiscard]] bool is_symmetric(const SparseMatrix& m, double tol = 1e-12);

}  // namespace gave
