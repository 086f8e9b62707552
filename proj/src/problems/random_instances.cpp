#include "gave/problems/random_instances.hpp"

#include <cmath>

#include "gave/error.hpp"

namespace gave {

DominantInstance random_dominant_instance(const DominantInstanceParams& params, std::mt19937_64& rng) {
    const std::size_t n = params.n;
    if (n == 0) throw Error(ErrorCode::InvalidParams, "instance size must be >= 1");
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> diag(1.0, 4.0);

    std::vector<SparseMatrix::Triplet> a;
    std::vector<SparseMatrix::Triplet> b;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = diag(rng);
        Vector off(n), bro(n);
        double off_sum = 0.0;
        double b_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            off[j] = (j == i) ? 0.0 : unit(rng);
            bro[j] = unit(rng);
            off_sum += std::fabs(off[j]);
            b_sum += std::fabs(bro[j]);
        }
        const double off_scale = off_sum > 0.0 ? params.off_diagonal_fraction * d / off_sum : 0.0;
        const double b_row_scale = b_sum > 0.0 ? params.b_scale * d / b_sum : 0.0;
        a.push_back({i, i, d});
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) a.push_back({i, j, off[j] * off_scale});
            b.push_back({i, j, bro[j] * b_row_scale});
        }
    }
    DominantInstance out;
    out.problem.A = SparseMatrix::from_triplets(n, n, std::move(a));
    out.problem.B = SparseMatrix::from_triplets(n, n, std::move(b));
    out.x_star.resize(n);
    for (double& v : out.x_star) v = 2.0 * unit(rng);
    out.problem.b = out.problem.A.multiply(out.x_star);
    const Vector bx = out.problem.B.multiply(abs(out.x_star));
    for (std::size_t i = 0; i < n; ++i) out.problem.b[i] -= bx[i];
    return out;
}

}  // namespace gave
