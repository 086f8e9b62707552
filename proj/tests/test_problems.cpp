#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "gave/error.hpp"
#include "gave/matrixlab/lu.hpp"
#include "gave/problems/gave_problem.hpp"
#include "gave/problems/lattice.hpp"
#include "gave/problems/oracle.hpp"
#include "gave/problems/problem_io.hpp"
#include "gave/problems/random_instances.hpp"
#include "support/oracles.hpp"

using namespace gave;

namespace {

SparseMatrix dense2(double a, double b, double c, double d) {
    return SparseMatrix::from_triplets(2, 2, {{0, 0, a}, {0, 1, b}, {1, 0, c}, {1, 1, d}});
}

GaveProblem two_by_two() { return {dense2(4, -1, -1, 4), SparseMatrix::identity(2), {-6, 4}}; }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected gave::Error");
    return ErrorCode::InvalidArgument;
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const char* tag) {
        path = std::filesystem::temp_directory_path() /
               (std::string("gave_") + tag + "_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("residual") {
    TEST_CASE("exact lattice solution") {
        const auto conv = lcp_to_gave(generate_lattice({6, 4.0, LatticeVariant::symmetric}));
        REQUIRE(conv.witness);
        CHECK(residual(conv.problem, conv.witness->x_star) <= 1e-12);
    }

    TEST_CASE("linear identity at zero") {
        const GaveProblem p{SparseMatrix::identity(2), SparseMatrix(2, 2), {1, 1}};
        CHECK(residual(p, Vector{0, 0}) == doctest::Approx(1.0));
        CHECK_FALSE(residual_value(p, Vector{0, 0}).absolute);
    }

    TEST_CASE("2x2 instance and its oracle solution") {
        const GaveProblem p = two_by_two();
        CHECK(residual(p, Vector{-1, 1}) == 0.0);
        const auto sols = sign_enumeration_oracle(p);
        REQUIRE(sols.size() == 1);
        CHECK(distance_inf(sols[0].x, Vector{-1, 1}) <= 1e-12);
    }

    TEST_CASE("zero right-hand side falls back to the absolute norm") {
        const GaveProblem p{SparseMatrix::identity(2), SparseMatrix(2, 2), {0, 0}};
        const auto r = residual_value(p, Vector{3, 4});
        CHECK(r.absolute);
        CHECK(r.value == doctest::Approx(5.0));
    }

    TEST_CASE("dimension errors") {
        const GaveProblem p = two_by_two();
        CHECK(code_of([&] { (void)residual(p, Vector{1, 2, 3}); }) == ErrorCode::DimensionMismatch);
        const GaveProblem bad{SparseMatrix::identity(2), SparseMatrix::identity(3), {1, 1}};
        CHECK(code_of([&] { bad.validate(); }) == ErrorCode::DimensionMismatch);
    }
}

TEST_SUITE("lcp conversion") {
    TEST_CASE("example 3.1 at m = 2") {
        const auto conv = lcp_to_gave(generate_lattice({2, 4.0, LatticeVariant::symmetric}));
        REQUIRE(conv.witness);
        CHECK(conv.witness->x_star == Vector{-0.5, -1, -0.5, -1});
        CHECK(conv.witness->z_star == Vector{1, 2, 1, 2});
        CHECK(conv.witness->sign_pattern == std::vector<int>{-1, -1, -1, -1});
        CHECK(residual(conv.problem, conv.witness->x_star) <= 1e-12);
    }

    TEST_CASE("identity R gives B = 0") {
        const LcpProblem lcp{SparseMatrix::identity(2), {-1, -1}, Vector{1, 1}};
        const auto conv = lcp_to_gave(lcp);
        CHECK(conv.problem.A == SparseMatrix::identity(2, 2.0));
        CHECK(conv.problem.B.nnz() == 0);
        REQUIRE(conv.witness);
        CHECK(conv.witness->x_star == Vector{-0.5, -0.5});
    }

    TEST_CASE("random dominant R with planted z") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::uniform_real_distribution<double> pos(0.1, 3.0);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<SparseMatrix::Triplet> t;
            for (std::size_t i = 0; i < 5; ++i) {
                double off = 0.0;
                for (std::size_t j = 0; j < 5; ++j) {
                    if (i == j) continue;
                    const double v = u(rng);
                    off += std::fabs(v);
                    t.push_back({i, j, v});
                }
                t.push_back({i, i, off + pos(rng)});
            }
            LcpProblem lcp{SparseMatrix::from_triplets(5, 5, t), {}, std::nullopt};
            Vector z(5);
            for (double& v : z) v = pos(rng);
            lcp.q = lcp.R.multiply(z);
            for (double& v : lcp.q) v = -v;
            lcp.known_solution = z;
            CHECK(complementarity_residual(lcp, z) <= 1e-12);
            const auto conv = lcp_to_gave(lcp);
            REQUIRE(conv.witness);
            CHECK(residual(conv.problem, conv.witness->x_star) <= 1e-10);
        }
    }

    TEST_CASE("gave solution to lcp pair") {
        auto pair = gave_solution_to_lcp(Vector{-0.5, -1});
        CHECK(pair.z == Vector{1, 2});
        CHECK(pair.w == Vector{0, 0});
        pair = gave_solution_to_lcp(Vector{0, 0});
        CHECK(pair.z == Vector{0, 0});
        CHECK(pair.w == Vector{0, 0});
        pair = gave_solution_to_lcp(Vector{3, -2});
        CHECK(pair.z == Vector{0, 4});
        CHECK(pair.w == Vector{6, 0});
    }

    TEST_CASE("round trip is exact") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(-1e3, 1e3);
        for (int trial = 0; trial < 1000; ++trial) {
            Vector x(7);
            for (double& v : x) v = u(rng);
            const auto pair = gave_solution_to_lcp(x);
            for (std::size_t i = 0; i < x.size(); ++i) {
                CHECK((pair.w[i] - pair.z[i]) / 2.0 == x[i]);
                CHECK(pair.z[i] >= 0.0);
                CHECK(pair.w[i] >= 0.0);
                CHECK(pair.z[i] * pair.w[i] == 0.0);
            }
        }
    }

    TEST_CASE("sign pattern") {
        CHECK(sign_pattern(Vector{-2, 0, 3}) == std::vector<int>{-1, 0, 1});
    }
}

TEST_SUITE("lattice generator") {
    TEST_CASE("single block") {
        const auto lcp = generate_lattice({1, 0.0, LatticeVariant::symmetric});
        CHECK(lcp.R == SparseMatrix::identity(1, 4.0));
        CHECK(lcp.q == Vector{-4});
        REQUIRE(lcp.known_solution);
        CHECK(*lcp.known_solution == Vector{1});
    }

    TEST_CASE("example 3.1 at m = 2 entrywise") {
        const auto lcp = generate_lattice({2, 4.0, LatticeVariant::symmetric});
        const auto expected = SparseMatrix::from_triplets(
            4, 4,
            {{0, 0, 8}, {0, 1, -1}, {0, 2, -1}, {1, 0, -1}, {1, 1, 8}, {1, 3, -1},
             {2, 0, -1}, {2, 2, 8}, {2, 3, -1}, {3, 1, -1}, {3, 2, -1}, {3, 3, 8}});
        CHECK(lcp.R == expected);
        CHECK(lcp.q == Vector{-5, -13, -5, -13});
    }

    TEST_CASE("example 3.2 at m = 2 entrywise") {
        const auto lcp = generate_lattice({2, 4.0, LatticeVariant::nonsymmetric});
        const auto expected = SparseMatrix::from_triplets(
            4, 4,
            {{0, 0, 8}, {0, 1, -0.5}, {0, 2, -0.5}, {1, 0, -1.5}, {1, 1, 8}, {1, 3, -0.5},
             {2, 0, -1.5}, {2, 2, 8}, {2, 3, -0.5}, {3, 1, -1.5}, {3, 2, -1.5}, {3, 3, 8}});
        CHECK(lcp.R == expected);
        CHECK(lcp.R.at(1, 0) == -1.5);
        CHECK(lcp.R.at(0, 1) == -0.5);
        CHECK_FALSE(lcp.R == lcp.R.transpose());
    }

    TEST_CASE("odd size truncates the alternating pattern") {
        CHECK(alternating_solution(5) == Vector{1, 2, 1, 2, 1});
        const auto lcp = generate_lattice({3, 1.0, LatticeVariant::symmetric});
        CHECK(lcp.known_solution->size() == 9);
        CHECK(lcp.known_solution->back() == 1.0);
    }

    TEST_CASE("invalid size") {
        CHECK(code_of([] { (void)generate_lattice({0, 4.0, LatticeVariant::symmetric}); }) == ErrorCode::InvalidParams);
    }

    TEST_CASE("generated instances are consistent") {
        for (std::size_t m = 1; m <= 10; ++m) {
            for (double mu : {0.0, 1.0, 4.0}) {
                for (auto variant : {LatticeVariant::symmetric, LatticeVariant::nonsymmetric}) {
                    const auto lcp = generate_lattice({m, mu, variant});
                    REQUIRE(lcp.known_solution);
                    const Vector w = lcp.R.multiply(*lcp.known_solution);
                    for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::fabs(w[i] + lcp.q[i]) <= 1e-12);
                    CHECK(complementarity_residual(lcp, *lcp.known_solution) <= 1e-10);
                    const auto conv = lcp_to_gave(lcp);
                    CHECK(residual(conv.problem, conv.witness->x_star) <= 1e-12);
                }
            }
        }
    }
}

TEST_SUITE("sign enumeration oracle") {
    TEST_CASE("linear case") {
        const GaveProblem p{SparseMatrix::identity(2, 2.0), SparseMatrix(2, 2), {-1, -1}};
        const auto sols = sign_enumeration_oracle(p);
        REQUIRE(sols.size() == 1);
        CHECK(distance_inf(sols[0].x, Vector{-0.5, -0.5}) <= 1e-15);
    }

    TEST_CASE("example 3.1 at m = 2 has exactly the known solution") {
        const auto conv = lcp_to_gave(generate_lattice({2, 4.0, LatticeVariant::symmetric}));
        const auto sols = sign_enumeration_oracle(conv.problem);
        REQUIRE(sols.size() == 1);
        CHECK(distance_inf(sols[0].x, Vector{-0.5, -1, -0.5, -1}) <= 1e-12);
        CHECK(sols[0].signs == std::vector<int>{-1, -1, -1, -1});
    }

    TEST_CASE("no solution on either branch") {
        const GaveProblem p{SparseMatrix::identity(1), SparseMatrix::identity(1, 2.0), {1}};
        CHECK(sign_enumeration_oracle(p).empty());
    }

    TEST_CASE("zero crossings are merged") {
        // x = 0 in the first component is accepted under both signs
        const GaveProblem p{SparseMatrix::identity(2, 2.0), SparseMatrix::identity(2), {0, 3}};
        const auto sols = sign_enumeration_oracle(p);
        REQUIRE(sols.size() == 1);
        CHECK(distance_inf(sols[0].x, Vector{0, 3}) <= 1e-12);
    }

    TEST_CASE("multiple solutions are all reported") {
        // x - 3|x| = -2 has a root on each branch
        const GaveProblem p{SparseMatrix::identity(1), SparseMatrix::identity(1, 3.0), {-2}};
        // s = +1: -2x = -2, x = 1 ; s = -1: 4x = -2, x = -0.5
        const auto sols = sign_enumeration_oracle(p);
        REQUIRE(sols.size() == 2);
        CHECK(sols[0].x[0] == doctest::Approx(-0.5));
        CHECK(sols[1].x[0] == doctest::Approx(1.0));
    }

    TEST_CASE("size guard") {
        const GaveProblem p{SparseMatrix::identity(21), SparseMatrix(21, 21), Vector(21, 1.0)};
        CHECK(code_of([&] { (void)sign_enumeration_oracle(p); }) == ErrorCode::TooLarge);
    }

    TEST_CASE("soundness and worker independence on random instances") {
        std::mt19937_64 rng(21);
        std::uniform_int_distribution<std::size_t> size(1, 8);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = size(rng);
            const SparseMatrix a = gave::testing::random_sparse(n, 0.7, rng);
            const SparseMatrix b = gave::testing::random_sparse(n, 0.7, rng);
            Vector rhs(n);
            for (double& v : rhs) v = u(rng);
            const GaveProblem p{a, b, rhs};
            const auto serial = sign_enumeration_oracle(p, 1);
            const auto parallel = sign_enumeration_oracle(p, 4);
            REQUIRE(serial.size() == parallel.size());
            for (std::size_t k = 0; k < serial.size(); ++k) {
                CHECK(serial[k].x == parallel[k].x);
                CHECK(residual(p, serial[k].x) <= 1e-9);
            }
        }
    }

    TEST_CASE("completeness when B = 0") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<std::size_t> size(1, 10);
        std::normal_distribution<double> normal;
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = size(rng);
            const SparseMatrix a = gave::testing::random_nonsingular(n, rng);
            Vector rhs(n);
            for (double& v : rhs) v = normal(rng);
            const auto sols = sign_enumeration_oracle({a, SparseMatrix(n, n), rhs});
            REQUIRE(sols.size() == 1);
            const Vector direct = gave::testing::dense_solve_oracle(a, rhs);
            CHECK(distance_inf(sols[0].x, direct) <= 1e-9);
        }
    }
}

TEST_SUITE("random dominant instances") {
    TEST_CASE("planted solution solves the instance") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const auto inst = random_dominant_instance({6, 0.1, 0.5}, rng);
            CHECK(residual(inst.problem, inst.x_star) <= 1e-12);
            const auto sols = sign_enumeration_oracle(inst.problem);
            REQUIRE(sols.size() == 1);
            CHECK(distance_inf(sols[0].x, inst.x_star) <= 1e-9);
        }
    }
}

TEST_SUITE("problem directories") {
    TEST_CASE("write then read") {
        TempDir dir("io");
        const auto conv = lcp_to_gave(generate_lattice({3, 4.0, LatticeVariant::nonsymmetric}));
        write_problem_dir(dir.path, conv.problem, conv.witness->x_star);
        const StoredProblem back = read_problem_dir(dir.path);
        CHECK(back.problem.A == conv.problem.A);
        CHECK(back.problem.B == conv.problem.B);
        CHECK(back.problem.b == conv.problem.b);
        REQUIRE(back.x_star);
        CHECK(*back.x_star == conv.witness->x_star);
    }

    TEST_CASE("missing files and mismatched sizes") {
        TempDir dir("bad");
        CHECK(code_of([&] { (void)read_problem_dir(dir.path); }) == ErrorCode::IoError);
        write_problem_dir(dir.path, two_by_two());
        std::ofstream(dir.path / "b.txt") << "1\n2\n3\n";
        CHECK(code_of([&] { (void)read_problem_dir(dir.path); }) == ErrorCode::DimensionMismatch);
    }
}
