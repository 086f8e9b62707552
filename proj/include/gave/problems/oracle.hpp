#pragma once

#include <cstddef>
#include <vector>

#include "gave/problems/gave_problem.hpp"

namespace gave {

inline constexpr std::size_t kOracleMaxSize = 20;

struct OracleSolution {
    Vector x;
    std::vector<int> signs;
};

/// Every solution of a small GAVE, found by enumerating sign patterns.
///
/// For each s in {-1, +1}^n solves (A - B diag(s)) x = b densely and keeps x
/// when s_i x_i >= 0 for all i. Singular branches are skipped. Results are
/// deduplicated within 1e-9 (infinity norm) in pattern order; each carries a
/// GAVE residual <= 1e-9. Throws TooLarge for n > 20.
///
/// `workers` splits the pattern space; the result does not depend on it.
[[nodiscard]] std::vector<OracleSolution> sign_enumeration_oracle(const GaveProblem& p,
                                                                  std::size_t workers = 1);

}  // namespace gave
