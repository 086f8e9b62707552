#include "gave/matrixlab/matrix_class.hpp"

#include <cmath>
#include <sstream>

#include "gave/error.hpp"
#include "gave/matrixlab/spectral.hpp"

namespace gave {

SparseMatrix comparison_matrix(const SparseMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "comparison matrix of a non-square matrix");
    auto t = m.triplets();
    for (auto& e : t) e.value = (e.row == e.col) ? std::fabs(e.value) : -std::fabs(e.value);
    return SparseMatrix::from_triplets(m.rows(), m.cols(), std::move(t));
}

MatrixVerdict is_z_matrix(const SparseMatrix& m) {
    MatrixVerdict v;
    if (!m.is_square()) {
        v.reason = "not square";
        return v;
    }
    for (const auto& e : m.triplets()) {
        if (e.row != e.col && e.value > 0.0) {
            std::ostringstream os;
            os << "positive off-diagonal entry " << e.value << " at (" << e.row << ", " << e.col << ")";
            v.reason = os.str();
            v.row = e.row;
            v.col = e.col;
            v.value = e.value;
            return v;
        }
    }
    v.holds = true;
    v.reason = "Z-matrix";
    return v;
}

MatrixVerdict is_m_matrix(const SparseMatrix& m) {
    MatrixVerdict v = is_z_matrix(m);
    if (!v.holds) return v;
    const Vector d = m.diagonal_values();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] > 0.0)) {
            v.holds = false;
            v.reason = "nonpositive diagonal entry";
            v.row = i;
            v.col = i;
            v.value = d[i];
            return v;
        }
    }
    // Jacobi matrix D^{-1}N with N = D - M >= 0
    auto t = m.triplets();
    std::vector<SparseMatrix::Triplet> jacobi;
    jacobi.reserve(t.size());
    for (const auto& e : t) {
        if (e.row != e.col) jacobi.push_back({e.row, e.col, -e.value / d[e.row]});
    }
    const SparseMatrix j = SparseMatrix::from_triplets(m.rows(), m.cols(), std::move(jacobi));
    const SpectralEstimate rho = spectral_radius(j);
    v.jacobi_radius = rho.value;
    v.holds = rho.value < 1.0;
    std::ostringstream os;
    os << "rho(I - D^-1 M) = " << rho.value << (v.holds ? " < 1" : " >= 1");
    if (!rho.converged) os << " (unconverged estimate)";
    v.reason = os.str();
    return v;
}

MatrixVerdict is_h_plus_matrix(const SparseMatrix& m) {
    if (!m.is_square()) {
        MatrixVerdict v;
        v.reason = "not square";
        return v;
    }
    const Vector d = m.diagonal_values();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] > 0.0)) {
            MatrixVerdict v;
            v.reason = "diagonal entry not strictly positive";
            v.row = i;
            v.col = i;
            v.value = d[i];
            return v;
        }
    }
    MatrixVerdict v = is_m_matrix(comparison_matrix(m));
    v.reason = "comparison matrix: " + v.reason;
    return v;
}

}  // namespace gave
