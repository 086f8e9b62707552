#pragma once

#include <filesystem>
#include <optional>

#include "gave/problems/gave_problem.hpp"

namespace gave {

struct StoredProblem {
    GaveProblem problem;
    std::optional<Vector> x_star;
};

/// Directory layout: A.mtx, B.mtx (Matrix Market), b.txt, optional xstar.txt.
[[nodiscard]] StoredProblem read_problem_dir(const std::filesystem::path& dir);
void write_problem_dir(const std::filesystem::path& dir, const GaveProblem& p,
                       const std::optional<Vector>& x_star = std::nullopt);

}  // namespace gave
