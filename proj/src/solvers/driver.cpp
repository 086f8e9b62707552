#include "gave/solvers/driver.hpp"

#include <chrono>
#include <cmath>

namespace gave {

SolveReport iteration_driver(const IterationStep& step, const GaveProblem& p, const SolverConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = p.size();
    config.validate(n);

    SolveReport report;
    Vector current = config.initial_guess(n);
    Vector next(n);
    if (config.record_iterates) report.iterates.push_back(current);
    report.residual_log.reserve(std::min<std::size_t>(config.k_max, 1024));

    while (report.iterations < config.k_max) {
        step(current, next);
        std::swap(current, next);
        ++report.iterations;
        const double res = residual(p, current);
        report.residual_log.push_back(res);
        if (config.record_iterates) report.iterates.push_back(current);
        if (res < config.tol) {
            report.converged = true;
            report.stop = StopReason::converged;
            break;
        }
        if (!std::isfinite(res) || res > kDivergenceLimit) {
            report.stop = StopReason::diverged;
            break;
        }
    }
    report.x = std::move(current);
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace gave
