#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gave/matrixlab/dense_matrix.hpp"
#include "gave/matrixlab/matrix_class.hpp"
#include "gave/problems/gave_problem.hpp"

namespace gave {

/// Largest n for which explicit dense inverse products are formed.
inline constexpr std::size_t kDenseCertificateLimit = 4096;

/// Outcome of one sufficient convergence test for the maximum-based
/// iteration. Only the quantities relevant to the theorem are set.
struct ConvergenceReport {
    int theorem_id = 0;
    bool holds = false;
    /// rho(f_Omega + g_Omega)
    std::optional<double> rho;
    /// Left and right side of the tested strict inequality.
    std::optional<double> lhs;
    std::optional<double> rhs;
    /// tau = 2 ||B||_2
    std::optional<double> tau;
    /// smallest eigenvalue of A + B
    std::optional<double> mu_min;
    std::optional<double> omega;
    /// Signed slack of the tested inequality (positive when it holds).
    std::optional<double> margin;
    std::vector<std::pair<std::string, MatrixVerdict>> verdicts;
    std::string note;
};

/// f_Omega + g_Omega = |(A+B+Omega)^{-1} Omega| + 2 |(A+B+Omega)^{-1} B|,
/// formed column by column from one sparse factorization.
/// Throws SingularIterationMatrix or TooLargeForDense (n > 4096).
[[nodiscard]] DenseMatrix contraction_matrix(const GaveProblem& p, const SparseMatrix& omega);

/// rho(f_Omega + g_Omega) < 1.
[[nodiscard]] ConvergenceReport check_theorem1(const GaveProblem& p, const SparseMatrix& omega);

/// ||(A+B)^{-1}||_2 < (2||Omega||_2 + 2||B||_2)^{-1}; the right side is +inf
/// when Omega = B = 0. Throws SingularIterationMatrix.
[[nodiscard]] ConvergenceReport check_theorem2(const GaveProblem& p, const SparseMatrix& omega);

/// For symmetric positive definite A + B and Omega = w I: 2||B||_2 < mu_min(A+B).
/// Throws InvalidOmega for w <= 0, NotSymmetric or NotPositiveDefinite.
[[nodiscard]] ConvergenceReport check_theorem3(const GaveProblem& p, double omega_scalar);

/// A + B is H+ and <A+B> - 2|B| is a nonsingular M-matrix, for a positive
/// diagonal Omega. Throws InvalidOmega otherwise.
[[nodiscard]] ConvergenceReport check_theorem4(const GaveProblem& p, const SparseMatrix& omega);

/// key = value lines.
[[nodiscard]] std::string to_key_value(const ConvergenceReport& report);

/// Header and row for CSV export.
[[nodiscard]] std::string certificate_csv_header();
[[nodiscard]] std::string to_csv_row(const ConvergenceReport& report);

}  // namespace gave
