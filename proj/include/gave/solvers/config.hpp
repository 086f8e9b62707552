#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <optional>
#include <string>
#include <vector>

#include "gave/problems/gave_problem.hpp"

namespace gave {

/// How the Omega matrix of the iteration is chosen.
class OmegaSpec {
public:
    enum class Kind { diagonal_of_a, scalar, explicit_matrix };

    /// Omega = diag(A)
    [[nodiscard]] static OmegaSpec diagonal_of_a() { return OmegaSpec(Kind::diagonal_of_a, 0.0, {}); }
    /// Omega = w I
    [[nodiscard]] static OmegaSpec scalar(double w) { return OmegaSpec(Kind::scalar, w, {}); }
    [[nodiscard]] static OmegaSpec explicit_matrix(SparseMatrix m) {
        return OmegaSpec(Kind::explicit_matrix, 0.0, std::move(m));
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double scalar_value() const noexcept { return scalar_; }
    [[nodiscard]] std::string describe() const;

    /// Materializes Omega for problem p. Throws DimensionMismatch for an
    /// explicit matrix of the wrong size.
    [[nodiscard]] SparseMatrix build(const GaveProblem& p) const;

private:
    OmegaSpec(Kind kind, double w, SparseMatrix m) : kind_(kind), scalar_(w), matrix_(std::move(m)) {}

    Kind kind_;
    double scalar_;
    SparseMatrix matrix_;
};

inline constexpr double kDefaultTol = 1e-6;
inline constexpr std::size_t kDefaultMaxIterations = 500;
inline constexpr double kDivergenceLimit = 1e12;

struct SolverConfig {
    OmegaSpec omega = OmegaSpec::diagonal_of_a();
    double tol = kDefaultTol;
    std::size_t k_max = kDefaultMaxIterations;
    /// Initial guess; the zero vector when empty.
    std::optional<Vector> x0;
    /// Keep every iterate x^0, x^1, ... in the report.
    bool record_iterates = false;

    /// Throws InvalidArgument unless tol > 0 and k_max >= 1, and
    /// DimensionMismatch when x0 does not have length n.
    void validate(std::size_t n) const;
    [[nodiscard]] Vector initial_guess(std::size_t n) const;
};

enum class StopReason { converged, max_iterations, diverged };

[[nodiscard]] std::string_view to_string(StopReason reason) noexcept;

struct SolveReport {
    Vector x;
    /// Updates performed; x^0 is not counted. For GMRES, total inner steps.
    std::size_t iterations = 0;
    /// RES after each update (for GMRES: the Arnoldi estimates, with the
    /// last entry replaced by the true RES of the returned x).
    std::vector<double> residual_log;
    bool converged = false;
    StopReason stop = StopReason::max_iterations;
    double wall_time = 0.0;
    /// Set by the sign-reduced solve only.
    std::optional<bool> sign_consistent;
    /// x^0, x^1, ..., x^k when requested.
    std::vector<Vector> iterates;

    [[nodiscard]] double final_residual() const {
        return residual_log.empty() ? std::numeric_limits<double>::quiet_NaN() : residual_log.back();
    }
};

}  // namespace gave
