#include "gave/problems/lattice.hpp"

#include "gave/error.hpp"

namespace gave {

Vector alternating_solution(std::size_t n) {
    Vector z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = (i % 2 == 0) ? 1.0 : 2.0;
    return z;
}

LcpProblem generate_lattice(const LatticeParams& params) {
    if (params.m < 1) throw Error(ErrorCode::InvalidParams, "lattice dimension m must be >= 1");
    const std::size_t m = params.m;
    const std::size_t n = m * m;
    const bool sym = params.variant == LatticeVariant::symmetric;
    const double sub = sym ? -1.0 : -1.5;
    const double sup = sym ? -1.0 : -0.5;

    std::vector<SparseMatrix::Triplet> t;
    t.reserve(5 * n);
    for (std::size_t block = 0; block < m; ++block) {
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t i = block * m + k;
            t.push_back({i, i, 4.0 + params.mu});
            if (k > 0) t.push_back({i, i - 1, sub});
            if (k + 1 < m) t.push_back({i, i + 1, sup});
            if (block > 0) t.push_back({i, i - m, sub});
            if (block + 1 < m) t.push_back({i, i + m, sup});
        }
    }
    LcpProblem lcp;
    lcp.R = SparseMatrix::from_triplets(n, n, std::move(t));
    Vector z = alternating_solution(n);
    lcp.q = lcp.R.multiply(z);
    for (double& v : lcp.q) v = -v;
    lcp.known_solution = std::move(z);
    return lcp;
}

}  // namespace gave
