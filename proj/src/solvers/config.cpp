#include "gave/solvers/config.hpp"

#include <sstream>

#include "gave/error.hpp"

namespace gave {

std::string OmegaSpec::describe() const {
    switch (kind_) {
        case Kind::diagonal_of_a: return "diag(A)";
        case Kind::scalar: {
            std::ostringstream os;
            os << scalar_ << "*I";
            return os.str();
        }
        case Kind::explicit_matrix: return "explicit";
    }
    return "unknown";
}

SparseMatrix OmegaSpec::build(const GaveProblem& p) const {
    const std::size_t n = p.size();
    switch (kind_) {
        case Kind::diagonal_of_a: {
            const Vector d = p.A.diagonal_values();
            return SparseMatrix::diagonal(d);
        }
        case Kind::scalar: return SparseMatrix::identity(n, scalar_);
        case Kind::explicit_matrix:
            if (matrix_.rows() != n || matrix_.cols() != n) {
                throw Error(ErrorCode::DimensionMismatch, "explicit Omega does not match problem size");
            }
            return matrix_;
    }
    return SparseMatrix(n, n);
}

void SolverConfig::validate(std::size_t n) const {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be > 0");
    if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 1");
    if (x0 && x0->size() != n) throw Error(ErrorCode::DimensionMismatch, "x0 length does not match problem");
}

Vector SolverConfig::initial_guess(std::size_t n) const { return x0 ? *x0 : Vector(n, 0.0); }

std::string_view to_string(StopReason reason) noexcept {
    switch (reason) {
        case StopReason::converged: return "converged";
        case StopReason::max_iterations: return "max_iterations";
        case StopReason::diverged: return "diverged";
    }
    return "unknown";
}

}  // namespace gave
