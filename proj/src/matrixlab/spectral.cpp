#include "gave/matrixlab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>

#include "gave/error.hpp"

namespace gave {

namespace {

using MatVec = std::function<void(std::span<const double>, std::span<double>)>;

double dense_spectral_radius(const DenseMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXd e(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(e, false);
    if (solver.info() != Eigen::Success) return std::numeric_limits<double>::quiet_NaN();
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// Convergence test on a sequence of estimates: successive change below tol
// and, once a contraction rate is observable, the geometric tail bound
// change * r / (1 - r) also below tol.
class StagnationTest {
public:
    bool update(double estimate) {
        const double change = std::fabs(estimate - previous_);
        const double scale = std::max(std::fabs(estimate), 1e-300);
        bool done = false;
        if (has_previous_ && change <= kPowerIterationTol * scale) {
            done = true;
            if (has_change_ && last_change_ > 0.0) {
                const double rate = std::min(change / last_change_, 0.999999);
                done = change * rate / (1.0 - rate) <= kPowerIterationTol * scale;
            }
        }
        if (has_previous_) {
            last_change_ = change;
            has_change_ = true;
        }
        previous_ = estimate;
        has_previous_ = true;
        return done;
    }

private:
    double previous_ = 0.0;
    double last_change_ = 0.0;
    bool has_previous_ = false;
    bool has_change_ = false;
};

// Power iteration for the Perron root of a nonnegative operator.
SpectralEstimate perron_power_iteration(const MatVec& apply, std::size_t n, bool& certified) {
    certified = false;
    SpectralEstimate out;
    if (n == 0) {
        out.converged = true;
        return out;
    }
    Vector x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    Vector y(n);
    StagnationTest stagnation;
    for (std::size_t it = 1; it <= kPowerIterationCap; ++it) {
        apply(x, y);
        out.iterations = it;
        const double ny = norm2(y);
        if (ny == 0.0) {
            // nilpotent on the iterate; the ones vector only vanishes for rho = 0 here
            out.value = 0.0;
            out.converged = true;
            certified = true;
            return out;
        }
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        bool positive = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] <= 0.0) {
                positive = false;
                break;
            }
            const double ratio = y[i] / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (positive && hi - lo <= 1e-12 * hi) {
            out.value = 0.5 * (lo + hi);
            out.converged = true;
            certified = true;
            return out;
        }
        out.value = ny;  // x has unit 2-norm
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
        if (stagnation.update(ny)) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

// Power iteration for the largest eigenvalue of a symmetric positive
// semidefinite operator using Rayleigh quotients.
SpectralEstimate symmetric_power_iteration(const MatVec& apply, std::size_t n) {
    SpectralEstimate out;
    if (n == 0) {
        out.converged = true;
        return out;
    }
    // a generic deterministic start avoids orthogonality to the dominant mode
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.25 * std::sin(1.0 + 1.7 * static_cast<double>(i));
    const double nx = norm2(x);
    for (double& v : x) v /= nx;
    Vector y(n);
    StagnationTest stagnation;
    for (std::size_t it = 1; it <= kPowerIterationCap; ++it) {
        apply(x, y);
        out.iterations = it;
        const double rayleigh = dot(x, y);
        const double ny = norm2(y);
        if (ny == 0.0) {
            out.value = 0.0;
            out.converged = true;
            return out;
        }
        out.value = rayleigh;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
        if (stagnation.update(rayleigh)) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

}  // namespace

SpectralEstimate spectral_radius(const SparseMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "spectral radius of a non-square matrix");
    for (double v : m.values()) {
        if (v < 0.0) throw Error(ErrorCode::NonNegativityViolation, "spectral_radius expects M >= 0");
    }
    if (m.nnz() == 0) return {0.0, true, 0, false};
    bool certified = false;
    SpectralEstimate est = perron_power_iteration(
        [&](std::span<const double> x, std::span<double> y) { m.multiply(x, y); }, m.rows(), certified);
    if (!certified && m.rows() <= kDenseFallbackLimit) {
        const double dense = dense_spectral_radius(m.to_dense());
        if (std::isfinite(dense)) {
            est.value = dense;
            est.converged = true;
            est.dense_fallback = true;
        }
    }
    return est;
}

SpectralEstimate spectral_radius(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "spectral radius of a non-square matrix");
    bool any = false;
    for (double v : m.data()) {
        if (v < 0.0) throw Error(ErrorCode::NonNegativityViolation, "spectral_radius expects M >= 0");
        any = any || v != 0.0;
    }
    if (!any) return {0.0, true, 0, false};
    bool certified = false;
    SpectralEstimate est = perron_power_iteration(
        [&](std::span<const double> x, std::span<double> y) { m.multiply(x, y); }, m.rows(), certified);
    if (!certified && m.rows() <= kDenseFallbackLimit) {
        const double dense = dense_spectral_radius(m);
        if (std::isfinite(dense)) {
            est.value = dense;
            est.converged = true;
            est.dense_fallback = true;
        }
    }
    return est;
}

SpectralEstimate two_norm(const SparseMatrix& m) {
    if (m.nnz() == 0) return {0.0, true, 0, false};
    const SparseMatrix mt = m.transpose();
    Vector tmp(m.rows());
    SpectralEstimate est = symmetric_power_iteration(
        [&](std::span<const double> x, std::span<double> y) {
            m.multiply(x, tmp);
            mt.multiply(tmp, y);
        },
        m.cols());
    est.value = std::sqrt(std::max(est.value, 0.0));
    return est;
}

SpectralEstimate inverse_two_norm(const LuFactorization& factors) {
    SpectralEstimate est = symmetric_power_iteration(
        [&](std::span<const double> x, std::span<double> y) {
            const Vector t = factors.solve(x);
            const Vector s = factors.solve_transposed(t);
            std::copy(s.begin(), s.end(), y.begin());
        },
        factors.size());
    est.value = std::sqrt(std::max(est.value, 0.0));
    return est;
}

bool is_symmetric(const SparseMatrix& m, double tol) {
    if (!m.is_square()) return false;
    const double bound = tol * std::max(1.0, m.max_abs());
    const SparseMatrix diff = m - m.transpose();
    return diff.max_abs() <= bound;
}

SpectralEstimate smallest_eigenvalue_spd(const SparseMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigenvalue of a non-square matrix");
    if (!is_symmetric(m)) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric within 1e-12");
    if (m.rows() == 0) return {0.0, true, 0, false};

    LuFactorization factors;
    try {
        factors = lu_factorize(m, PivotPolicy::diagonal);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SingularMatrix) {
            throw Error(ErrorCode::NotPositiveDefinite, "elimination met a vanishing pivot");
        }
        throw;
    }
    // without row exchanges the pivots are the LDL^T diagonal
    bool row_exchange = false;
    const auto perm = factors.row_permutation();
    for (std::size_t i = 0; i < perm.size(); ++i) row_exchange = row_exchange || perm[i] != i;
    const Vector piv = factors.pivots();
    if (row_exchange || std::any_of(piv.begin(), piv.end(), [](double d) { return !(d > 0.0); })) {
        throw Error(ErrorCode::NotPositiveDefinite, "nonpositive pivot in elimination");
    }

    // largest eigenvalue of M^{-1}, reciprocated
    SpectralEstimate est = symmetric_power_iteration(
        [&](std::span<const double> x, std::span<double> y) {
            const Vector s = factors.solve(x);
            std::copy(s.begin(), s.end(), y.begin());
        },
        m.rows());
    est.value = est.value > 0.0 ? 1.0 / est.value : 0.0;
    return est;
}

}  // namespace gave
