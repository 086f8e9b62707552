#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "gave/matrixlab/vector_ops.hpp"

namespace gave {

/// y = Op(x); x and y never alias.
using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

struct GmresOptions {
    std::size_t restart = 20;
    /// Relative residual target ||b - Op(x)||_2 / ||b||_2.
    double tol = 1e-6;
    /// Cap on total Arnoldi steps across all restart cycles.
    std::size_t max_inner = 500;
};

enum class GmresStatus {
    Converged,
    /// Arnoldi produced a zero vector; the returned iterate solves the
    /// projected problem exactly and `converged` reflects the true residual.
    Breakdown,
    MaxIterations,
};

struct GmresResult {
    Vector x;
    /// Total Arnoldi steps (one matrix-vector product each).
    std::size_t inner_iterations = 0;
    std::size_t restarts = 0;
    bool converged = false;
    GmresStatus status = GmresStatus::MaxIterations;
    /// True relative residual of x.
    double relative_residual = 0.0;
    /// Least-squares residual estimate after each Arnoldi step.
    std::vector<double> estimate_log;
};

/// Restarted GMRES(m) with modified Gram-Schmidt and Givens rotations.
///
/// An empty x0 means the zero vector. Throws InvalidArgument for
/// restart == 0 or tol <= 0, DimensionMismatch for a wrong-sized x0.
[[nodiscard]] GmresResult gmres(const LinearOperator& op, std::span<const double> b,
                                const GmresOptions& options, std::span<const double> x0 = {});

}  // namespace gave
