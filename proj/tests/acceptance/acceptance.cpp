// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gave/bench/bench.hpp"
#include "gave/certificates/certificates.hpp"
#include "gave/matrixlab/matrix_class.hpp"
#include "gave/problems/oracle.hpp"
#include "gave/problems/random_instances.hpp"
#include "gave/solvers/methods.hpp"
#include "support/oracles.hpp"

using namespace gave;
using gave::bench::BenchConfig;
using gave::bench::BenchRow;
using gave::bench::Method;
using gave::bench::Source;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << what << "; ";
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << "exception: " << e.what();
    }
    if (!out.pass) ++failures;
    std::string detail = out.detail.str();
    std::printf("%s [%d] %s%s%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), detail.empty() ? "" : " :: ",
                detail.c_str());
    std::fflush(stdout);
}

struct TableRun {
    std::vector<BenchRow> rows;
    double seconds = 0.0;
};

TableRun run_table(Source source, std::vector<Method> methods,
                   bench::StartProtocol protocol = bench::StartProtocol::cold) {
    BenchConfig c;
    c.source = source;
    c.sizes = {50, 100};
    c.methods = std::move(methods);
    c.protocol = protocol;
    const auto t0 = std::chrono::steady_clock::now();
    TableRun run{bench::run_benchmark(c), 0.0};
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

std::string describe(const BenchRow& r) {
    return std::string(r.method) + " n=" + std::to_string(r.n) + " IT=" + std::to_string(r.it) +
           " RES=" + bench::scientific(r.res, 4);
}

void check_table(Outcome& out, const TableRun& run) {
    for (const auto& r : run.rows) {
        out.require(r.error.empty(), describe(r) + " error " + r.error);
        out.require(r.converged && r.res < 1e-6, describe(r) + " did not reach RES < 1e-6");
        if (r.method == "M-1") {
            out.require(r.it >= 16 && r.it <= 19, describe(r) + " outside 16..19");
        } else {
            out.require(r.it == 2, describe(r) + " expected IT = 2");
        }
    }
    out.require(run.seconds < 30.0, "runtime " + std::to_string(run.seconds) + " s");
}

struct RandomCase {
    GaveProblem problem;
    SparseMatrix omega;
    DenseMatrix contraction{0, 0};
};

// Strictly diagonally dominant A with small B, kept only when theorem 1 certifies.
std::vector<RandomCase> certified_instances(std::size_t count, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::vector<RandomCase> cases;
    while (cases.size() < count) {
        auto inst = random_dominant_instance({size(rng), 0.1, 0.5}, rng);
        SparseMatrix omega = SparseMatrix::diagonal(inst.problem.A.diagonal_values());
        if (!check_theorem1(inst.problem, omega).holds) continue;
        DenseMatrix t = contraction_matrix(inst.problem, omega);
        cases.push_back({std::move(inst.problem), std::move(omega), std::move(t)});
    }
    return cases;
}

Vector random_start(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    Vector x(n);
    for (double& v : x) v = u(rng);
    return x;
}

}  // namespace

int main() {
    TableRun ex1, ex2;

    report(1, "Example 3.1 table, n = 2500 and 10000, cold start x0 = 0", [&](Outcome& out) {
        ex1 = run_table(Source::example_3_1, {Method::mn, Method::nms_gs, Method::max_based});
        check_table(out, ex1);
    });

    report(2, "Example 3.2 table, n = 2500 and 10000, cold start x0 = 0", [&](Outcome& out) {
        ex2 = run_table(Source::example_3_2, {Method::mn, Method::nms_gs, Method::max_based});
        check_table(out, ex2);
    });

    std::vector<BenchRow> gmres_rows;
    report(3, "GMRES(20) on (A+B)x = q at n = 2500", [&](Outcome& out) {
        const std::pair<Source, std::size_t> targets[] = {{Source::example_3_1, 10}, {Source::example_3_2, 12}};
        for (const auto& [source, target] : targets) {
            BenchConfig c;
            c.source = source;
            c.sizes = {50};
            c.methods = {Method::gmres20};
            for (const auto& r : bench::run_benchmark(c)) {
                gmres_rows.push_back(r);
                out.require(r.converged && r.res < 1e-6, describe(r) + " did not reach RES < 1e-6");
                const long diff = static_cast<long>(r.it) - static_cast<long>(target);
                out.require(std::labs(diff) <= 3, describe(r) + " not within 3 of " + std::to_string(target));
            }
        }
    });

    report(4, "converged runs are within 1e-5 of x*", [&](Outcome& out) {
        std::size_t checked = 0;
        for (const auto* rows : {&ex1.rows, &ex2.rows, &gmres_rows}) {
            for (const auto& r : *rows) {
                if (!r.converged) continue;
                ++checked;
                out.require(r.error_vs_x_star && *r.error_vs_x_star <= 1e-5, describe(r) + " far from x*");
            }
        }
        out.require(checked > 0, "no converged runs");
        out.detail << checked << " runs checked";
    });

    std::mt19937_64 rng(20240601);
    const std::vector<RandomCase> cases = certified_instances(100, rng);
    SolverConfig tight;
    tight.tol = 1e-10;
    tight.record_iterates = true;

    report(5, "unique oracle solution reached by method 3 from 10 starts, 100 certified instances",
           [&](Outcome& out) {
               for (std::size_t c = 0; c < cases.size(); ++c) {
                   const auto sols = sign_enumeration_oracle(cases[c].problem);
                   if (sols.size() != 1) {
                       out.require(false, "instance " + std::to_string(c) + " has " + std::to_string(sols.size()) +
                                              " solutions");
                       continue;
                   }
                   std::mt19937_64 starts(c);
                   for (int s = 0; s < 10; ++s) {
                       SolverConfig cfg = tight;
                       cfg.record_iterates = false;
                       cfg.x0 = random_start(cases[c].problem.size(), starts);
                       const auto r = solve_max_based(cases[c].problem, cfg);
                       out.require(r.converged && distance_inf(r.x, sols[0].x) <= 1e-6,
                                   "instance " + std::to_string(c) + " start " + std::to_string(s));
                   }
               }
           });

    report(6, "componentwise contraction |e+| <= (f+g)|e| + 1e-10 on every iteration", [&](Outcome& out) {
        std::size_t steps = 0;
        for (std::size_t c = 0; c < cases.size(); ++c) {
            const auto sols = sign_enumeration_oracle(cases[c].problem);
            if (sols.size() != 1) continue;
            const Vector& xs = sols[0].x;
            const std::size_t n = xs.size();
            std::mt19937_64 starts(c);
            for (int s = 0; s < 10; ++s) {
                SolverConfig cfg = tight;
                cfg.x0 = random_start(n, starts);
                const auto r = solve_max_based(cases[c].problem, cfg);
                for (std::size_t k = 0; k + 1 < r.iterates.size(); ++k) {
                    Vector e(n), e_next(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        e[i] = std::fabs(r.iterates[k][i] - xs[i]);
                        e_next[i] = std::fabs(r.iterates[k + 1][i] - xs[i]);
                    }
                    const Vector bound = cases[c].contraction.multiply(e);
                    for (std::size_t i = 0; i < n; ++i) {
                        if (e_next[i] > bound[i] + 1e-10) {
                            out.require(false, "instance " + std::to_string(c) + " iteration " + std::to_string(k));
                        }
                    }
                    ++steps;
                }
            }
        }
        out.detail << steps << " steps checked";
    });

    report(7, "|inv(A)| <= inv(<A>) + 1e-10 for 100 random H-matrices", [&](Outcome& out) {
        std::mt19937_64 hrng(7);
        std::uniform_int_distribution<std::size_t> size(1, 16);
        for (int t = 0; t < 100; ++t) {
            const SparseMatrix a = gave::testing::random_h_matrix(size(hrng), hrng);
            const SparseMatrix cmp = comparison_matrix(a);
            out.require(is_m_matrix(cmp).holds, "generated matrix is not an H-matrix");
            const Eigen::MatrixXd lhs = gave::testing::to_eigen(a).inverse().cwiseAbs();
            const Eigen::MatrixXd rhs = gave::testing::to_eigen(cmp).inverse();
            out.require((lhs - rhs).maxCoeff() <= 1e-10, "bound violated on trial " + std::to_string(t));
        }
    });

    report(8, "max-based fixed-point form agrees with the GAVE, 1000 points and instances", [&](Outcome& out) {
        std::mt19937_64 prng(8);
        std::uniform_int_distribution<std::size_t> size(1, 8);
        std::uniform_real_distribution<double> u(-10.0, 10.0);
        for (int t = 0; t < 1000; ++t) {
            const auto inst = random_dominant_instance({size(prng), 0.5, 0.5}, prng);
            const GaveProblem& p = inst.problem;
            const std::size_t n = p.size();
            const SparseMatrix omega = SparseMatrix::diagonal(p.A.diagonal_values());
            const SparseMatrix k = (p.A + p.B) + omega;

            Vector x(n);
            for (double& v : x) v = u(prng);
            const Vector mp = max_plus(x);
            for (std::size_t i = 0; i < n; ++i) {
                if (2.0 * mp[i] - x[i] != std::fabs(x[i])) out.require(false, "identity inexact at trial " + std::to_string(t));
            }

            // (A+B+Omega)x - Omega x - 2B max{0,x} - b, relative to ||b||
            auto fixed_point_res = [&](const Vector& y) {
                Vector r = k.multiply(y);
                const Vector oy = omega.multiply(y);
                const Vector bm = p.B.multiply(max_plus(y));
                for (std::size_t i = 0; i < n; ++i) r[i] -= oy[i] + 2.0 * bm[i] + p.b[i];
                return norm2(r) / norm2(p.b);
            };
            const double scale = 1.0 + norm_inf(x) * (k.norm_inf() + p.B.norm_inf());
            out.require(std::fabs(residual(p, x) - fixed_point_res(x)) <= 1e-10 * scale,
                        "residuals differ at random point, trial " + std::to_string(t));
            const double at_gave = residual(p, inst.x_star);
            const double at_fp = fixed_point_res(inst.x_star);
            out.require(at_gave <= 1e-10 && at_fp <= 1e-10 && std::fabs(at_gave - at_fp) <= 1e-10,
                        "residuals do not vanish together, trial " + std::to_string(t));
        }
    });

    report(9, "NMS with M = A, N = 0 matches method 1 per iteration within 1e-14, 50 instances", [&](Outcome& out) {
        std::mt19937_64 mrng(9);
        std::uniform_int_distribution<std::size_t> size(2, 16);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const auto inst = random_dominant_instance({size(mrng), 0.3, 0.5}, mrng);
            SolverConfig cfg;
            cfg.record_iterates = true;
            const auto mn = solve_mn(inst.problem, cfg);
            const auto nms = solve_nms(inst.problem, cfg, SplittingStrategy::full());
            if (mn.iterates.size() != nms.iterates.size()) {
                out.require(false, "iteration counts differ on instance " + std::to_string(t));
                continue;
            }
            for (std::size_t k = 0; k < mn.iterates.size(); ++k) {
                worst = std::max(worst, distance_inf(mn.iterates[k], nms.iterates[k]));
            }
        }
        out.require(worst <= 1e-14, "max deviation " + bench::scientific(worst, 4));
    });

    // Not a criterion: the reference M-2 and M-3 rows are reproduced when each
    // method starts from the previous method's final iterate.
    const std::pair<Source, const char*> chained[] = {{Source::example_3_1, "3.1"}, {Source::example_3_2, "3.2"}};
    for (const auto& [source, name] : chained) {
        const auto run = run_table(source, {Method::mn, Method::nms_gs, Method::max_based},
                                   bench::StartProtocol::chained);
        std::printf("INFO chained starts, Example %s:", name);
        for (const auto& r : run.rows) std::printf(" %s", describe(r).c_str());
        std::printf("\n");
    }

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
