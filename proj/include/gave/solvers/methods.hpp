#pragma once

#include <optional>
#include <span>

#include "gave/matrixlab/gmres.hpp"
#include "gave/solvers/config.hpp"

namespace gave {

/// max{0, x} componentwise, so that |x| = 2 max{0, x} - x.
[[nodiscard]] Vector max_plus(std::span<const double> x);

/// Modified Newton: x^{k+1} = (A + Omega)^{-1} (Omega x^k + B|x^k| + b).
/// Throws SingularIterationMatrix when A + Omega cannot be factorized.
[[nodiscard]] SolveReport solve_mn(const GaveProblem& p, const SolverConfig& config);

/// Splitting A = M - N for the Newton-based matrix splitting method.
struct SplittingStrategy {
    enum class Kind {
        /// M = D - L, N = U
        gauss_seidel,
        /// M = A, N = 0
        full,
        /// caller-supplied M, with N = M - A unless given
        explicit_matrix,
    };

    Kind kind = Kind::gauss_seidel;
    SparseMatrix m;
    std::optional<SparseMatrix> n;

    [[nodiscard]] static SplittingStrategy gauss_seidel() { return {Kind::gauss_seidel, {}, std::nullopt}; }
    [[nodiscard]] static SplittingStrategy full() { return {Kind::full, {}, std::nullopt}; }
    [[nodiscard]] static SplittingStrategy explicit_matrix(SparseMatrix m,
                                                           std::optional<SparseMatrix> n = std::nullopt) {
        return {Kind::explicit_matrix, std::move(m), std::move(n)};
    }
};

/// Newton-based matrix splitting:
/// x^{k+1} = (M + Omega)^{-1} ((N + Omega) x^k + B|x^k| + b).
/// Throws InvalidSplitting when M - N does not reproduce A and
/// SingularIterationMatrix when M + Omega cannot be factorized.
[[nodiscard]] SolveReport solve_nms(const GaveProblem& p, const SolverConfig& config,
                                    const SplittingStrategy& splitting = SplittingStrategy::gauss_seidel());

/// Maximum-based iteration:
/// x^{k+1} = (A + B + Omega)^{-1} (Omega x^k + 2B max{0, x^k} + b).
/// Throws SingularIterationMatrix when A + B + Omega cannot be factorized.
[[nodiscard]] SolveReport solve_max_based(const GaveProblem& p, const SolverConfig& config);

enum class AssumedSign {
    /// x <= 0, so |x| = -x and the GAVE is (A + B) x = b
    nonpositive,
    /// x > 0, so |x| = x and the GAVE is (A - B) x = b
    positive,
};

enum class LinearBackend {
    direct,
    gmres,
    /// y^{k+1} = (A +/- B + Omega)^{-1} (Omega y^k + b)
    stationary,
};

/// Solves the linear system selected by an assumed solution sign. The
/// report's `sign_consistent` says whether the result honours the
/// assumption; an inconsistent result is not an error.
[[nodiscard]] SolveReport solve_sign_reduced(const GaveProblem& p, const SolverConfig& config,
                                             AssumedSign sign, LinearBackend backend,
                                             std::size_t gmres_restart = 20);

}  // namespace gave
