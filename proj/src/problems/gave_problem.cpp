#include "gave/problems/gave_problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gave/error.hpp"

namespace gave {

void GaveProblem::validate() const {
    const std::size_t n = b.size();
    auto check = [n](const SparseMatrix& m, const char* name) {
        if (m.rows() != n || m.cols() != n) {
            throw Error(ErrorCode::DimensionMismatch,
                        std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                            std::to_string(n));
        }
    };
    check(A, "A");
    check(B, "B");
}

ResidualValue residual_value(const GaveProblem& p, std::span<const double> x) {
    const std::size_t n = p.size();
    if (x.size() != n || p.A.cols() != n || p.B.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "residual: x has length " + std::to_string(x.size()) +
                                                      ", problem size " + std::to_string(n));
    }
    Vector r = p.A.multiply(x);
    const Vector bx = p.B.multiply(abs(x));
    for (std::size_t i = 0; i < n; ++i) r[i] = r[i] - bx[i] - p.b[i];
    const double num = norm2(r);
    const double den = norm2(p.b);
    if (den == 0.0) return {num, true};
    return {num / den, false};
}

double residual(const GaveProblem& p, std::span<const double> x) { return residual_value(p, x).value; }

double complementarity_residual(const LcpProblem& lcp, std::span<const double> z) {
    Vector w = lcp.R.multiply(z);
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        w[i] += lcp.q[i];
        worst = std::max(worst, std::fabs(std::min(z[i], w[i])));
    }
    return worst;
}

ConvertedLcp lcp_to_gave(const LcpProblem& lcp) {
    const std::size_t n = lcp.q.size();
    if (lcp.R.rows() != n || lcp.R.cols() != n) throw Error(ErrorCode::DimensionMismatch, "LCP matrix R");
    const SparseMatrix eye = SparseMatrix::identity(n);
    ConvertedLcp out{{lcp.R + eye, lcp.R - eye, lcp.q}, std::nullopt};
    if (lcp.known_solution) {
        const Vector& z = *lcp.known_solution;
        if (z.size() != n) throw Error(ErrorCode::DimensionMismatch, "LCP known solution");
        Vector w = lcp.R.multiply(z);
        SolutionWitness witness;
        witness.z_star = z;
        witness.x_star.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] += lcp.q[i];
            witness.x_star[i] = 0.5 * (w[i] - z[i]);
        }
        witness.sign_pattern = sign_pattern(witness.x_star);
        out.witness = std::move(witness);
    }
    return out;
}

LcpPair gave_solution_to_lcp(std::span<const double> x) {
    LcpPair out{Vector(x.size()), Vector(x.size())};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::fabs(x[i]);
        out.z[i] = a - x[i];
        out.w[i] = a + x[i];
    }
    return out;
}

std::vector<int> sign_pattern(std::span<const double> x) {
    std::vector<int> s(x.size());
    std::transform(x.begin(), x.end(), s.begin(), [](double v) { return (v > 0.0) - (v < 0.0); });
    return s;
}

}  // namespace gave
