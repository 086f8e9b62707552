#include "gave/matrixlab/gmres.hpp"

#include <cmath>
#include <vector>

#include "gave/error.hpp"

namespace gave {

namespace {

// Solves the leading k x k upper triangular block of H (column-major, ldh rows).
Vector back_substitute(const std::vector<double>& h, std::size_t ldh, std::span<const double> g,
                       std::size_t k) {
    Vector y(k);
    for (std::size_t i = k; i-- > 0;) {
        double s = g[i];
        for (std::size_t j = i + 1; j < k; ++j) s -= h[j * ldh + i] * y[j];
        y[i] = s / h[i * ldh + i];
    }
    return y;
}

}  // namespace

GmresResult gmres(const LinearOperator& op, std::span<const double> b, const GmresOptions& options,
                  std::span<const double> x0) {
    if (options.restart == 0) throw Error(ErrorCode::InvalidArgument, "GMRES restart must be >= 1");
    if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "GMRES tol must be > 0");
    const std::size_t n = b.size();
    if (!x0.empty() && x0.size() != n) throw Error(ErrorCode::DimensionMismatch, "GMRES x0");

    GmresResult result;
    result.x = x0.empty() ? Vector(n, 0.0) : Vector(x0.begin(), x0.end());

    const double bnorm = norm2(b);
    if (bnorm == 0.0) {
        result.x.assign(n, 0.0);
        result.converged = true;
        result.status = GmresStatus::Converged;
        return result;
    }

    const std::size_t m = options.restart;
    const std::size_t ldh = m + 1;
    std::vector<Vector> v(m + 1, Vector(n));
    std::vector<double> h(ldh * m);
    std::vector<double> cs(m), sn(m), g(m + 1);
    Vector r(n), w(n);

    auto true_residual = [&]() {
        op(result.x, r);
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
        return norm2(r);
    };

    double beta = true_residual();
    result.relative_residual = beta / bnorm;
    if (result.relative_residual <= options.tol) {
        result.converged = true;
        result.status = GmresStatus::Converged;
        return result;
    }

    while (result.inner_iterations < options.max_inner) {
        for (std::size_t i = 0; i < n; ++i) v[0][i] = r[i] / beta;
        std::fill(g.begin(), g.end(), 0.0);
        g[0] = beta;

        std::size_t k = 0;
        bool breakdown = false;
        bool estimate_converged = false;
        while (k < m && result.inner_iterations < options.max_inner) {
            op(v[k], w);
            ++result.inner_iterations;
            double* hk = &h[k * ldh];
            const double wnorm0 = norm2(w);
            for (std::size_t i = 0; i <= k; ++i) {
                hk[i] = dot(w, v[i]);
                axpy(-hk[i], v[i], w);
            }
            hk[k + 1] = norm2(w);
            breakdown = hk[k + 1] <= 1e-14 * wnorm0;
            if (!breakdown) {
                for (std::size_t i = 0; i < n; ++i) v[k + 1][i] = w[i] / hk[k + 1];
            } else {
                hk[k + 1] = 0.0;
            }

            for (std::size_t i = 0; i < k; ++i) {
                const double t = cs[i] * hk[i] + sn[i] * hk[i + 1];
                hk[i + 1] = -sn[i] * hk[i] + cs[i] * hk[i + 1];
                hk[i] = t;
            }
            const double rho = std::hypot(hk[k], hk[k + 1]);
            if (rho == 0.0) {
                // singular projected matrix; nothing more to gain from this cycle
                breakdown = true;
                break;
            }
            cs[k] = hk[k] / rho;
            sn[k] = hk[k + 1] / rho;
            hk[k] = rho;
            hk[k + 1] = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] = cs[k] * g[k];
            ++k;

            const double estimate = std::fabs(g[k]) / bnorm;
            result.estimate_log.push_back(estimate);
            if (estimate <= options.tol) {
                estimate_converged = true;
                break;
            }
            if (breakdown) break;
        }

        if (k > 0) {
            const Vector y = back_substitute(h, ldh, g, k);
            for (std::size_t j = 0; j < k; ++j) axpy(y[j], v[j], result.x);
        }
        beta = true_residual();
        result.relative_residual = beta / bnorm;
        if (result.relative_residual <= options.tol) {
            result.converged = true;
            result.status = (breakdown && !estimate_converged) ? GmresStatus::Breakdown
                                                               : GmresStatus::Converged;
            return result;
        }
        if (breakdown) {
            result.status = GmresStatus::Breakdown;
            return result;
        }
        ++result.restarts;
    }
    result.status = GmresStatus::MaxIterations;
    return result;
}

}  // namespace gave
