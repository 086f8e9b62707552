#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gave/matrixlab/sparse_matrix.hpp"

namespace gave {

/// Ax - B|x| = b with square A, B of matching size.
struct GaveProblem {
    SparseMatrix A;
    SparseMatrix B;
    Vector b;

    [[nodiscard]] std::size_t size() const noexcept { return b.size(); }
    /// Throws DimensionMismatch unless A, B are n x n and b has length n.
    void validate() const;
};

/// Linear complementarity problem: z >= 0, w = Rz + q >= 0, z^T w = 0.
struct LcpProblem {
    SparseMatrix R;
    Vector q;
    std::optional<Vector> known_solution;
};

/// A known GAVE solution and the LCP pair it maps to.
struct SolutionWitness {
    Vector x_star;
    Vector z_star;
    std::vector<int> sign_pattern;
};

struct ResidualValue {
    double value = 0.0;
    /// Set when b = 0 and the absolute residual was returned instead.
    bool absolute = false;
};

/// RES = ||Ax - B|x| - b||_2 / ||b||_2 (absolute norm when b = 0).
[[nodiscard]] ResidualValue residual_value(const GaveProblem& p, std::span<const double> x);
[[nodiscard]] double residual(const GaveProblem& p, std::span<const double> x);

/// ||min(z, Rz + q)||_inf
[[nodiscard]] double complementarity_residual(const LcpProblem& lcp, std::span<const double> z);

struct ConvertedLcp {
    GaveProblem problem;
    std::optional<SolutionWitness> witness;
};

/// A = R + I, B = R - I, b = q. A known LCP solution z* becomes the witness
/// x* = (w* - z*) / 2 with w* = R z* + q.
[[nodiscard]] ConvertedLcp lcp_to_gave(const LcpProblem& lcp);

struct LcpPair {
    Vector z;
    Vector w;
};

/// z = |x| - x, w = |x| + x.
[[nodiscard]] LcpPair gave_solution_to_lcp(std::span<const double> x);

[[nodiscard]] std::vector<int> sign_pattern(std::span<const double> x);

}  // namespace gave
