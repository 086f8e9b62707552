#pragma once

#include <cstddef>

#include "gave/problems/gave_problem.hpp"

namespace gave {

enum class LatticeVariant {
    /// R_hat = tridiag(-I, S, -I), S = tridiag(-1, 4, -1)
    symmetric,
    /// R_hat = tridiag(-1.5 I, S, -0.5 I), S = tridiag(-1.5, 4, -0.5)
    nonsymmetric,
};

struct LatticeParams {
    std::size_t m = 1;
    double mu = 4.0;
    LatticeVariant variant = LatticeVariant::symmetric;
};

/// Block tridiagonal LCP on an m x m grid: R = R_hat + mu I of size m^2,
/// z* = (1, 2, 1, 2, ...) and q = -R z*. Throws InvalidParams for m < 1.
[[nodiscard]] LcpProblem generate_lattice(const LatticeParams& params);

/// The alternating (1, 2, 1, 2, ...) vector of length n.
[[nodiscard]] Vector alternating_solution(std::size_t n);

}  // namespace gave
