#include "gave/problems/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>

#include "gave/error.hpp"
#include "gave/matrixlab/dense_matrix.hpp"

namespace gave {

namespace {

constexpr double kDedupTol = 1e-9;
constexpr double kResidualTol = 1e-9;

// Candidates for patterns [first, last), in pattern order.
std::vector<OracleSolution> enumerate_range(const GaveProblem& p, const DenseMatrix& a,
                                            const DenseMatrix& b, std::uint64_t first,
                                            std::uint64_t last) {
    const std::size_t n = p.size();
    std::vector<OracleSolution> found;
    DenseMatrix branch(n, n);
    std::vector<int> signs(n);
    Vector x(n);
    for (std::uint64_t pattern = first; pattern < last; ++pattern) {
        for (std::size_t j = 0; j < n; ++j) signs[j] = ((pattern >> j) & 1U) ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) branch(i, j) = a(i, j) - b(i, j) * signs[j];
        }
        if (!dense_solve(branch, p.b, x)) continue;
        // rounding can push a true zero component to either side
        const double slack = 1e-12 * std::max(1.0, norm_inf(x));
        bool consistent = true;
        for (std::size_t i = 0; i < n && consistent; ++i) consistent = signs[i] * x[i] >= -slack;
        if (!consistent) continue;
        if (residual(p, x) > kResidualTol) continue;
        found.push_back({x, signs});
    }
    return found;
}

}  // namespace

std::vector<OracleSolution> sign_enumeration_oracle(const GaveProblem& p, std::size_t workers) {
    p.validate();
    const std::size_t n = p.size();
    if (n > kOracleMaxSize) {
        throw Error(ErrorCode::TooLarge, "sign enumeration limited to n <= 20, got " + std::to_string(n));
    }
    const DenseMatrix a = p.A.to_dense();
    const DenseMatrix b = p.B.to_dense();
    const std::uint64_t total = std::uint64_t{1} << n;
    workers = std::clamp<std::size_t>(workers, 1, static_cast<std::size_t>(std::min<std::uint64_t>(total, 64)));

    std::vector<std::vector<OracleSolution>> parts(workers);
    if (workers == 1) {
        parts[0] = enumerate_range(p, a, b, 0, total);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::uint64_t first = std::min<std::uint64_t>(total, w * chunk);
            const std::uint64_t last = std::min<std::uint64_t>(total, first + chunk);
            pool.emplace_back([&, w, first, last] { parts[w] = enumerate_range(p, a, b, first, last); });
        }
    }

    std::vector<OracleSolution> unique;
    for (auto& part : parts) {
        for (auto& candidate : part) {
            const bool seen = std::any_of(unique.begin(), unique.end(), [&](const OracleSolution& s) {
                return distance_inf(s.x, candidate.x) <= kDedupTol;
            });
            if (!seen) unique.push_back(std::move(candidate));
        }
    }
    return unique;
}

}  // namespace gave
