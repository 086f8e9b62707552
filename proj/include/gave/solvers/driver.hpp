#pragma once

#include <functional>
#include <span>

#include "gave/solvers/config.hpp"

namespace gave {

/// One fixed-point update: writes x^{k+1} given x^k (no aliasing).
using IterationStep = std::function<void(std::span<const double> current, std::span<double> next)>;

/// Shared stopping rule for every stationary method: apply `step` from x0,
/// evaluate RES after each update, stop once RES < tol, after k_max
/// updates, or when RES exceeds 1e12 or turns non-finite.
[[nodiscard]] SolveReport iteration_driver(const IterationStep& step, const GaveProblem& p,
                                           const SolverConfig& config);

}  // namespace gave
