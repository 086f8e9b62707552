#include "gave/certificates/certificates.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gave/error.hpp"
#include "gave/matrixlab/lu.hpp"
#include "gave/matrixlab/spectral.hpp"

namespace gave {

namespace {

LuFactorization factor_or_throw(const SparseMatrix& m, const char* name) {
    try {
        return lu_factorize(m);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SingularMatrix) {
            throw Error(ErrorCode::SingularIterationMatrix, std::string(name) + " is singular");
        }
        throw;
    }
}

void require_square(const GaveProblem& p, const SparseMatrix& omega) {
    p.validate();
    if (omega.rows() != p.size() || omega.cols() != p.size()) {
        throw Error(ErrorCode::DimensionMismatch, "Omega does not match problem size");
    }
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

}  // namespace

DenseMatrix contraction_matrix(const GaveProblem& p, const SparseMatrix& omega) {
    require_square(p, omega);
    const std::size_t n = p.size();
    if (n > kDenseCertificateLimit) {
        throw Error(ErrorCode::TooLargeForDense, "dense certificate limited to n <= 4096");
    }
    const LuFactorization factors = factor_or_throw((p.A + p.B) + omega, "A + B + Omega");
    // column j of K^{-1} X is K^{-1} X(:, j); X^T rows give those columns
    const SparseMatrix omega_t = omega.transpose();
    const SparseMatrix b_t = p.B.transpose();
    DenseMatrix t(n, n);
    Vector col(n);
    auto accumulate = [&](const SparseMatrix& xt, double weight) {
        const auto ptr = xt.row_ptr();
        const auto idx = xt.col_idx();
        const auto val = xt.values();
        for (std::size_t j = 0; j < n; ++j) {
            if (ptr[j] == ptr[j + 1]) continue;
            std::fill(col.begin(), col.end(), 0.0);
            for (std::size_t q = ptr[j]; q < ptr[j + 1]; ++q) col[idx[q]] = val[q];
            factors.solve_in_place(col);
            for (std::size_t i = 0; i < n; ++i) t(i, j) += weight * std::fabs(col[i]);
        }
    };
    accumulate(omega_t, 1.0);
    accumulate(b_t, 2.0);
    return t;
}

ConvergenceReport check_theorem1(const GaveProblem& p, const SparseMatrix& omega) {
    ConvergenceReport r;
    r.theorem_id = 1;
    const DenseMatrix t = contraction_matrix(p, omega);
    const SpectralEstimate rho = spectral_radius(t);
    r.rho = rho.value;
    r.lhs = rho.value;
    r.rhs = 1.0;
    r.margin = 1.0 - rho.value;
    r.holds = rho.value < 1.0;
    if (!rho.converged) r.note = "spectral radius estimate did not converge";
    return r;
}

ConvergenceReport check_theorem2(const GaveProblem& p, const SparseMatrix& omega) {
    require_square(p, omega);
    ConvergenceReport r;
    r.theorem_id = 2;
    const LuFactorization factors = factor_or_throw(p.A + p.B, "A + B");
    const SpectralEstimate inv_norm = inverse_two_norm(factors);
    const double denom = 2.0 * two_norm(omega).value + 2.0 * two_norm(p.B).value;
    r.lhs = inv_norm.value;
    r.rhs = denom > 0.0 ? 1.0 / denom : std::numeric_limits<double>::infinity();
    r.margin = *r.rhs - *r.lhs;
    r.holds = *r.lhs < *r.rhs;
    if (denom == 0.0) r.note = "Omega = B = 0: right side taken as +inf";
    return r;
}

ConvergenceReport check_theorem3(const GaveProblem& p, double omega_scalar) {
    p.validate();
    if (!(omega_scalar > 0.0)) throw Error(ErrorCode::InvalidOmega, "Omega = w I needs w > 0");
    ConvergenceReport r;
    r.theorem_id = 3;
    r.omega = omega_scalar;
    const SpectralEstimate mu = smallest_eigenvalue_spd(p.A + p.B);
    r.tau = 2.0 * two_norm(p.B).value;
    r.mu_min = mu.value;
    r.lhs = r.tau;
    r.rhs = r.mu_min;
    r.margin = *r.mu_min - *r.tau;
    r.holds = *r.tau < *r.mu_min;
    return r;
}

ConvergenceReport check_theorem4(const GaveProblem& p, const SparseMatrix& omega) {
    require_square(p, omega);
    if (!omega.is_diagonal()) throw Error(ErrorCode::InvalidOmega, "Omega must be diagonal");
    for (double d : omega.diagonal_values()) {
        if (!(d > 0.0)) throw Error(ErrorCode::InvalidOmega, "Omega must have a strictly positive diagonal");
    }
    ConvergenceReport r;
    r.theorem_id = 4;
    const SparseMatrix sum = p.A + p.B;
    MatrixVerdict h_plus = is_h_plus_matrix(sum);
    const SparseMatrix shifted = add(comparison_matrix(sum), p.B.abs(), 1.0, -2.0);
    MatrixVerdict m_matrix = is_m_matrix(shifted);
    r.holds = h_plus.holds && m_matrix.holds;
    if (m_matrix.jacobi_radius) {
        r.lhs = *m_matrix.jacobi_radius;
        r.rhs = 1.0;
        r.margin = 1.0 - *m_matrix.jacobi_radius;
    }
    r.verdicts.emplace_back("A+B is H+", std::move(h_plus));
    r.verdicts.emplace_back("<A+B>-2|B| is M", std::move(m_matrix));
    return r;
}

std::string to_key_value(const ConvergenceReport& r) {
    std::ostringstream os;
    os << "theorem = " << r.theorem_id << '\n';
    os << "holds = " << (r.holds ? "true" : "false") << '\n';
    auto line = [&](const char* key, const std::optional<double>& v) {
        if (v) os << key << " = " << format_number(*v) << '\n';
    };
    line("rho", r.rho);
    line("lhs", r.lhs);
    line("rhs", r.rhs);
    line("tau", r.tau);
    line("mu_min", r.mu_min);
    line("omega", r.omega);
    line("margin", r.margin);
    for (const auto& [name, verdict] : r.verdicts) {
        os << "verdict[" << name << "] = " << (verdict.holds ? "true" : "false") << " (" << verdict.reason
           << ")\n";
    }
    if (!r.note.empty()) os << "note = " << r.note << '\n';
    return os.str();
}

std::string certificate_csv_header() { return "theorem,holds,rho,lhs,rhs,tau,mu_min,margin"; }

std::string to_csv_row(const ConvergenceReport& r) {
    std::ostringstream os;
    os << r.theorem_id << ',' << (r.holds ? "true" : "false") << ',' << optional_number(r.rho) << ','
       << optional_number(r.lhs) << ',' << optional_number(r.rhs) << ',' << optional_number(r.tau) << ','
       << optional_number(r.mu_min) << ',' << optional_number(r.margin);
    return os.str();
}

}  // namespace gave
