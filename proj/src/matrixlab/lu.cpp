#include "gave/matrixlab/lu.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gave/error.hpp"

namespace gave {

namespace {

constexpr std::size_t kUnpivoted = std::numeric_limits<std::size_t>::max();
constexpr double kSingularCutoff = 1e-14;

// Column-compressed view of the matrix being factorized.
struct ColumnView {
    std::span<const std::size_t> ptr;
    std::span<const std::size_t> idx;
    std::span<const double> val;
};

// Depth-first reach of the nonzero pattern of column k in the graph of the
// partially built L. Fills xi[top..n) in topological order, returns top.
std::size_t reach(const ColumnView& b, std::size_t k, const std::vector<std::size_t>& l_ptr,
                  const std::vector<std::size_t>& l_idx, const std::vector<std::size_t>& pinv,
                  std::vector<std::size_t>& xi, std::vector<std::size_t>& stack,
                  std::vector<std::size_t>& pos, std::vector<char>& marked) {
    const std::size_t n = pinv.size();
    std::size_t top = n;
    for (std::size_t p = b.ptr[k]; p < b.ptr[k + 1]; ++p) {
        const std::size_t start = b.idx[p];
        if (marked[start]) continue;
        std::size_t head = 0;
        stack[0] = start;
        while (true) {
            const std::size_t j = stack[head];
            const std::size_t jcol = pinv[j];
            if (!marked[j]) {
                marked[j] = 1;
                // skip the unit diagonal, which is stored first
                pos[head] = (jcol == kUnpivoted) ? 0 : l_ptr[jcol] + 1;
            }
            bool done = true;
            const std::size_t end = (jcol == kUnpivoted) ? 0 : l_ptr[jcol + 1];
            for (std::size_t q = pos[head]; q < end; ++q) {
                const std::size_t i = l_idx[q];
                if (marked[i]) continue;
                pos[head] = q + 1;
                stack[++head] = i;
                done = false;
                break;
            }
            if (done) {
                xi[--top] = j;
                if (head == 0) break;
                --head;
            }
        }
    }
    for (std::size_t p = top; p < n; ++p) marked[xi[p]] = 0;
    return top;
}

}  // namespace

LuFactorization lu_factorize(const SparseMatrix& m, PivotPolicy policy) {
    if (!m.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "LU needs a square matrix, got " +
                                                      std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()));
    }
    const std::size_t n = m.rows();
    const double cutoff = kSingularCutoff * m.max_abs();

    // CSR of M^T is CSC of M
    const SparseMatrix mt = m.transpose();
    const ColumnView cols{mt.row_ptr(), mt.col_idx(), mt.values()};

    LuFactorization f;
    f.n_ = n;
    f.pinv_.assign(n, kUnpivoted);
    f.l_ptr_.assign(n + 1, 0);
    f.u_ptr_.assign(n + 1, 0);
    f.l_idx_.reserve(2 * m.nnz() + n);
    f.l_val_.reserve(2 * m.nnz() + n);
    f.u_idx_.reserve(2 * m.nnz() + n);
    f.u_val_.reserve(2 * m.nnz() + n);

    std::vector<double> x(n, 0.0);
    std::vector<std::size_t> xi(n), stack(n), pos(n);
    std::vector<char> marked(n, 0);

    for (std::size_t k = 0; k < n; ++k) {
        f.l_ptr_[k] = f.l_idx_.size();
        f.u_ptr_[k] = f.u_idx_.size();

        // x = L \ M(:, k), restricted to the reachable pattern
        const std::size_t top = reach(cols, k, f.l_ptr_, f.l_idx_, f.pinv_, xi, stack, pos, marked);
        for (std::size_t p = cols.ptr[k]; p < cols.ptr[k + 1]; ++p) x[cols.idx[p]] = cols.val[p];
        for (std::size_t px = top; px < n; ++px) {
            const std::size_t j = xi[px];
            const std::size_t jcol = f.pinv_[j];
            if (jcol == kUnpivoted) continue;
            const double xj = x[j];
            if (xj == 0.0) continue;
            for (std::size_t q = f.l_ptr_[jcol] + 1; q < f.l_ptr_[jcol + 1]; ++q) {
                x[f.l_idx_[q]] -= f.l_val_[q] * xj;
            }
        }

        std::size_t ipiv = kUnpivoted;
        double best = -1.0;
        for (std::size_t px = top; px < n; ++px) {
            const std::size_t i = xi[px];
            if (f.pinv_[i] == kUnpivoted) {
                if (std::fabs(x[i]) > best) {
                    best = std::fabs(x[i]);
                    ipiv = i;
                }
            } else {
                f.u_idx_.push_back(f.pinv_[i]);
                f.u_val_.push_back(x[i]);
            }
        }
        if (policy == PivotPolicy::diagonal) {
            ipiv = f.pinv_[k] == kUnpivoted ? k : kUnpivoted;
            best = ipiv == kUnpivoted ? 0.0 : std::fabs(x[k]);
        } else if (f.pinv_[k] == kUnpivoted && x[k] != 0.0 && std::fabs(x[k]) >= best) {
            // prefer the diagonal on ties
            ipiv = k;
        }
        if (ipiv == kUnpivoted || best <= 0.0 || std::fabs(x[ipiv]) < cutoff) {
            throw Error(ErrorCode::SingularMatrix,
                        "pivot below cutoff at column " + std::to_string(k));
        }

        const double pivot = x[ipiv];
        f.u_idx_.push_back(k);
        f.u_val_.push_back(pivot);
        f.pinv_[ipiv] = k;
        f.l_idx_.push_back(ipiv);
        f.l_val_.push_back(1.0);
        for (std::size_t px = top; px < n; ++px) {
            const std::size_t i = xi[px];
            if (f.pinv_[i] == kUnpivoted && x[i] != 0.0) {
                f.l_idx_.push_back(i);
                f.l_val_.push_back(x[i] / pivot);
            }
            x[i] = 0.0;
        }
    }
    f.l_ptr_[n] = f.l_idx_.size();
    f.u_ptr_[n] = f.u_idx_.size();
    for (auto& i : f.l_idx_) i = f.pinv_[i];
    return f;
}

Vector LuFactorization::pivots() const {
    Vector d(n_);
    for (std::size_t k = 0; k < n_; ++k) d[k] = u_val_[u_ptr_[k + 1] - 1];
    return d;
}

void LuFactorization::solve_in_place(std::span<double> r) const {
    if (r.size() != n_) {
        throw Error(ErrorCode::DimensionMismatch, "rhs of length " + std::to_string(r.size()) +
                                                      " for factor of size " + std::to_string(n_));
    }
    std::vector<double> y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[pinv_[i]] = r[i];
    for (std::size_t j = 0; j < n_; ++j) {
        const double yj = y[j];
        if (yj == 0.0) continue;
        for (std::size_t p = l_ptr_[j] + 1; p < l_ptr_[j + 1]; ++p) y[l_idx_[p]] -= l_val_[p] * yj;
    }
    for (std::size_t j = n_; j-- > 0;) {
        const std::size_t last = u_ptr_[j + 1] - 1;
        y[j] /= u_val_[last];
        const double yj = y[j];
        if (yj == 0.0) continue;
        for (std::size_t p = u_ptr_[j]; p < last; ++p) y[u_idx_[p]] -= u_val_[p] * yj;
    }
    std::copy(y.begin(), y.end(), r.begin());
}

Vector LuFactorization::solve(std::span<const double> r) const {
    Vector y(r.begin(), r.end());
    solve_in_place(y);
    return y;
}

Vector LuFactorization::solve_transposed(std::span<const double> r) const {
    if (r.size() != n_) throw Error(ErrorCode::DimensionMismatch, "transposed solve");
    // M^T = U^T L^T P
    std::vector<double> w(r.begin(), r.end());
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t last = u_ptr_[j + 1] - 1;
        double s = w[j];
        for (std::size_t p = u_ptr_[j]; p < last; ++p) s -= u_val_[p] * w[u_idx_[p]];
        w[j] = s / u_val_[last];
    }
    for (std::size_t j = n_; j-- > 0;) {
        double s = w[j];
        for (std::size_t p = l_ptr_[j] + 1; p < l_ptr_[j + 1]; ++p) s -= l_val_[p] * w[l_idx_[p]];
        w[j] = s;
    }
    Vector y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[i] = w[pinv_[i]];
    return y;
}

Vector solve_factored(const LuFactorization& f, std::span<const double> r) { return f.solve(r); }

}  // namespace gave
