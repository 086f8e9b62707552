#include "gave/solvers/methods.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gave/error.hpp"
#include "gave/matrixlab/lu.hpp"
#include "gave/solvers/driver.hpp"

namespace gave {

namespace {

LuFactorization factor_iteration_matrix(const SparseMatrix& m, const char* name) {
    try {
        return lu_factorize(m);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SingularMatrix) {
            throw Error(ErrorCode::SingularIterationMatrix, std::string(name) + " is singular (" + e.what() + ")");
        }
        throw;
    }
}

// Adds the elapsed time since `start` to the report (setup cost such as the
// factorization belongs to the method).
void charge_setup(SolveReport& report, std::chrono::steady_clock::time_point start,
                  std::chrono::steady_clock::time_point loop_start) {
    report.wall_time += std::chrono::duration<double>(loop_start - start).count();
}

}  // namespace

Vector max_plus(std::span<const double> x) {
    Vector r(x.size());
    std::transform(x.begin(), x.end(), r.begin(), [](double v) { return std::max(0.0, v); });
    return r;
}

SolveReport solve_mn(const GaveProblem& p, const SolverConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    p.validate();
    config.validate(p.size());
    const SparseMatrix omega = config.omega.build(p);
    const LuFactorization factors = factor_iteration_matrix(p.A + omega, "A + Omega");
    const std::size_t n = p.size();
    Vector t(n), u(n);

    const auto loop_start = std::chrono::steady_clock::now();
    SolveReport report = iteration_driver(
        [&](std::span<const double> x, std::span<double> next) {
            omega.multiply(x, t);
            p.B.multiply(abs(x), u);
            for (std::size_t i = 0; i < n; ++i) next[i] = t[i] + u[i] + p.b[i];
            factors.solve_in_place(next);
        },
        p, config);
    charge_setup(report, start, loop_start);
    return report;
}

SolveReport solve_nms(const GaveProblem& p, const SolverConfig& config, const SplittingStrategy& splitting) {
    const auto start = std::chrono::steady_clock::now();
    p.validate();
    config.validate(p.size());
    const std::size_t n = p.size();

    SparseMatrix m;
    SparseMatrix nmat;
    switch (splitting.kind) {
        case SplittingStrategy::Kind::gauss_seidel: {
            Splitting s = split(p.A);
            m = s.diagonal - s.lower;
            nmat = std::move(s.upper);
            break;
        }
        case SplittingStrategy::Kind::full:
            m = p.A;
            nmat = SparseMatrix(n, n);
            break;
        case SplittingStrategy::Kind::explicit_matrix:
            if (splitting.m.rows() != n || splitting.m.cols() != n) {
                throw Error(ErrorCode::DimensionMismatch, "splitting matrix M has the wrong size");
            }
            m = splitting.m;
            nmat = splitting.n ? *splitting.n : m - p.A;
            if (nmat.rows() != n || nmat.cols() != n) {
                throw Error(ErrorCode::DimensionMismatch, "splitting matrix N has the wrong size");
            }
            break;
    }
    const double mismatch = ((m - nmat) - p.A).max_abs();
    if (mismatch > 1e-14 * std::max(1.0, p.A.max_abs())) {
        throw Error(ErrorCode::InvalidSplitting, "M - N differs from A by " + std::to_string(mismatch));
    }

    const SparseMatrix omega = config.omega.build(p);
    const SparseMatrix n_plus_omega = nmat + omega;
    const LuFactorization factors = factor_iteration_matrix(m + omega, "M + Omega");
    Vector t(n), u(n);

    const auto loop_start = std::chrono::steady_clock::now();
    SolveReport report = iteration_driver(
        [&](std::span<const double> x, std::span<double> next) {
            n_plus_omega.multiply(x, t);
            p.B.multiply(abs(x), u);
            for (std::size_t i = 0; i < n; ++i) next[i] = t[i] + u[i] + p.b[i];
            factors.solve_in_place(next);
        },
        p, config);
    charge_setup(report, start, loop_start);
    return report;
}

SolveReport solve_max_based(const GaveProblem& p, const SolverConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    p.validate();
    config.validate(p.size());
    const std::size_t n = p.size();
    const SparseMatrix omega = config.omega.build(p);
    const LuFactorization factors = factor_iteration_matrix((p.A + p.B) + omega, "A + B + Omega");
    Vector t(n), u(n);

    const auto loop_start = std::chrono::steady_clock::now();
    SolveReport report = iteration_driver(
        [&](std::span<const double> x, std::span<double> next) {
            omega.multiply(x, t);
            p.B.multiply(max_plus(x), u);
            for (std::size_t i = 0; i < n; ++i) next[i] = t[i] + 2.0 * u[i] + p.b[i];
            factors.solve_in_place(next);
        },
        p, config);
    charge_setup(report, start, loop_start);
    return report;
}

SolveReport solve_sign_reduced(const GaveProblem& p, const SolverConfig& config, AssumedSign sign,
                               LinearBackend backend, std::size_t gmres_restart) {
    const auto start = std::chrono::steady_clock::now();
    p.validate();
    config.validate(p.size());
    const std::size_t n = p.size();
    const SparseMatrix system = (sign == AssumedSign::nonpositive) ? p.A + p.B : p.A - p.B;
    const char* system_name = (sign == AssumedSign::nonpositive) ? "A + B" : "A - B";

    SolveReport report;
    switch (backend) {
        case LinearBackend::direct: {
            const LuFactorization factors = factor_iteration_matrix(system, system_name);
            report.x = factors.solve(p.b);
            report.iterations = 1;
            report.residual_log.push_back(residual(p, report.x));
            report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            break;
        }
        case LinearBackend::gmres: {
            const Vector x0 = config.initial_guess(n);
            const GmresResult g = gmres([&](std::span<const double> x, std::span<double> y) { system.multiply(x, y); },
                                        p.b, GmresOptions{gmres_restart, config.tol, config.k_max}, x0);
            report.x = g.x;
            report.iterations = g.inner_iterations;
            report.residual_log = g.estimate_log;
            if (!report.residual_log.empty()) report.residual_log.back() = residual(p, report.x);
            report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            break;
        }
        case LinearBackend::stationary: {
            const SparseMatrix omega = config.omega.build(p);
            const LuFactorization factors = factor_iteration_matrix(system + omega, "reduced iteration matrix");
            Vector t(n);
            const auto loop_start = std::chrono::steady_clock::now();
            report = iteration_driver(
                [&](std::span<const double> y, std::span<double> next) {
                    omega.multiply(y, t);
                    for (std::size_t i = 0; i < n; ++i) next[i] = t[i] + p.b[i];
                    factors.solve_in_place(next);
                },
                p, config);
            charge_setup(report, start, loop_start);
            break;
        }
    }

    const double res = report.residual_log.empty() ? residual(p, report.x) : report.residual_log.back();
    if (backend != LinearBackend::stationary) {
        report.converged = res < config.tol;
        report.stop = report.converged ? StopReason::converged : StopReason::max_iterations;
    }
    report.sign_consistent = std::all_of(report.x.begin(), report.x.end(), [sign](double v) {
        return sign == AssumedSign::nonpositive ? v <= 0.0 : v > 0.0;
    });
    return report;
}

}  // namespace gave
