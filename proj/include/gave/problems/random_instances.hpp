#pragma once

#include <cstddef>
#include <random>

#include "gave/problems/gave_problem.hpp"

namespace gave {

struct DominantInstanceParams {
    std::size_t n = 4;
    /// Row sums of |B| are at most b_scale times the diagonal of A.
    double b_scale = 0.1;
    /// Off-diagonal row sums of |A| are at most this fraction of the diagonal.
    double off_diagonal_fraction = 0.5;
};

struct DominantInstance {
    GaveProblem problem;
    /// The planted solution, b = A x* - B|x*|.
    Vector x_star;
};

/// Dense random GAVE with strictly diagonally dominant A, a small B and a
/// planted solution of mixed sign.
[[nodiscard]] DominantInstance random_dominant_instance(const DominantInstanceParams& params,
                                                        std::mt19937_64& rng);

}  // namespace gave
