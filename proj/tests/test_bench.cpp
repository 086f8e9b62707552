#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "gave/bench/bench.hpp"
#include "gave/error.hpp"

using namespace gave;
using namespace gave::bench;

namespace {

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

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("tables") {
    TEST_CASE("csv row format") {
        BenchRow row;
        row.method = "M-3";
        row.n = 2500;
        row.it = 2;
        row.cpu_s = 0.002;
        row.res = 2.5077e-7;
        row.converged = true;
        const std::vector<BenchRow> rows{row};
        CHECK(emit_table(rows, TableFormat::csv) == "method,n,it,cpu_s,res\nM-3,2500,2,2.000e-3,2.5077e-7\n");
    }

    TEST_CASE("scientific notation") {
        CHECK(scientific(2.5077e-7, 4) == "2.5077e-7");
        CHECK(scientific(9.53114e-7, 4) == "9.5311e-7");
        CHECK(scientific(0.0, 4) == "0.0000e0");
        CHECK(scientific(12.5, 3) == "1.250e1");
    }

    TEST_CASE("empty input is rejected") {
        CHECK(code_of([] { (void)emit_table({}, TableFormat::csv); }) == ErrorCode::ConfigError);
        CHECK(code_of([] { (void)emit_certificates({}, TableFormat::markdown); }) == ErrorCode::ConfigError);
    }

    TEST_CASE("markdown layout has method groups and size columns") {
        std::vector<BenchRow> rows;
        for (const char* m : {"M-1", "M-2", "M-3", "G-20"}) {
            for (std::size_t n : {2500u, 10000u, 22500u, 40000u}) {
                BenchRow r;
                r.method = m;
                r.n = n;
                r.it = 2;
                r.res = 1e-7;
                r.converged = true;
                rows.push_back(r);
            }
        }
        const std::string md = emit_table(rows, TableFormat::markdown);
        CHECK(md.find("| 2500 | 10000 | 22500 | 40000 |") != std::string::npos);
        for (const char* m : {"M-1", "M-2", "M-3", "G-20"}) CHECK(md.find(m) != std::string::npos);
        std::size_t it_lines = 0;
        std::istringstream in(md);
        for (std::string line; std::getline(in, line);) {
            if (line.find("| IT |") != std::string::npos) ++it_lines;
        }
        CHECK(it_lines == 4);
    }

    TEST_CASE("method keys round trip") {
        for (Method m : {Method::mn, Method::nms_gs, Method::max_based, Method::gmres20}) {
            CHECK(parse_method(key(m)) == m);
        }
        CHECK(label(Method::gmres20) == "G-20");
        CHECK(code_of([] { (void)parse_method("newton"); }) == ErrorCode::ConfigError);
    }
}

TEST_SUITE("configuration") {
    TEST_CASE("invalid configurations") {
        BenchConfig c;
        c.sizes.clear();
        CHECK(code_of([&] { c.validate(); }) == ErrorCode::ConfigError);
        c = {};
        c.tol = -1.0;
        CHECK(code_of([&] { c.validate(); }) == ErrorCode::ConfigError);
        c = {};
        c.methods.clear();
        CHECK(code_of([&] { c.validate(); }) == ErrorCode::ConfigError);
        c = {};
        c.source = Source::file;
        CHECK(code_of([&] { c.validate(); }) == ErrorCode::ConfigError);
    }

    TEST_CASE("worker count") {
        BenchConfig c;
        c.threads = 3;
        CHECK(worker_count(c, 10) == 3);
        CHECK(worker_count(c, 2) == 2);
        c.timing_strict = true;
        CHECK(worker_count(c, 10) == 1);
    }
}

TEST_SUITE("runs") {
    TEST_CASE("single 1x1 row") {
        BenchConfig c;
        c.sizes = {1};
        c.methods = {Method::max_based};
        const auto rows = run_benchmark(c);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].n == 1);
        CHECK(rows[0].it >= 1);
        CHECK(rows[0].res < c.tol);
        CHECK(rows[0].converged);
    }

    TEST_CASE("deterministic columns and agreement between methods") {
        for (Source s : {Source::example_3_1, Source::example_3_2}) {
            BenchConfig c;
            c.source = s;
            c.sizes = {8, 12};
            c.threads = 2;
            const auto first = run_benchmark(c);
            const auto second = run_benchmark(c);
            REQUIRE(first.size() == 8);
            REQUIRE(second.size() == first.size());
            for (std::size_t i = 0; i < first.size(); ++i) {
                CHECK(first[i].method == second[i].method);
                CHECK(first[i].it == second[i].it);
                CHECK(first[i].res == second[i].res);
                CHECK(first[i].converged);
                REQUIRE(first[i].error_vs_x_star);
                CHECK(*first[i].error_vs_x_star <= 1e-5);
            }
            for (std::size_t i = 0; i < first.size(); ++i) {
                for (std::size_t j = 0; j < first.size(); ++j) {
                    if (first[i].n == first[j].n) CHECK(distance_inf(first[i].x, first[j].x) <= 1e-5);
                }
            }
        }
    }

    TEST_CASE("rows are ordered by method then size") {
        BenchConfig c;
        c.sizes = {6, 3};
        c.methods = {Method::max_based, Method::mn};
        const auto rows = run_benchmark(c);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].method == "M-3");
        CHECK(rows[0].n == 36);
        CHECK(rows[1].n == 9);
        CHECK(rows[2].method == "M-1");
    }

    TEST_CASE("random source is seeded") {
        BenchConfig c;
        c.source = Source::random;
        c.sizes = {6};
        c.seed = 77;
        const auto a = run_benchmark(c);
        const auto b = run_benchmark(c);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].x == b[i].x);
        c.seed = 78;
        CHECK_FALSE(run_benchmark(c)[0].x == a[0].x);
    }

    TEST_CASE("chained starts cut the stationary counts") {
        BenchConfig c;
        c.sizes = {20};
        c.methods = {Method::mn, Method::nms_gs, Method::max_based};
        c.protocol = StartProtocol::chained;
        const auto rows = run_benchmark(c);
        REQUIRE(rows.size() == 3);
        CHECK(rows[1].it == 1);
        CHECK(rows[2].it == 1);
        for (const auto& r : rows) CHECK(r.converged);
    }
}

TEST_SUITE("certificates") {
    TEST_CASE("diagonal instance passes all four") {
        const GaveProblem p{SparseMatrix::identity(3, 10.0), SparseMatrix::identity(3, 0.1), {1, 1, 1}};
        const auto row = certify_instance("diag", p, OmegaSpec::scalar(1.0));
        REQUIRE(row.reports.size() == 4);
        for (const auto& r : row.reports) CHECK(r.holds);
        CHECK(*row.reports[2].omega == 1.0);
    }

    TEST_CASE("example 3.1 at m = 2") {
        BenchConfig c;
        c.sizes = {2};
        const auto rows = certify(c);
        REQUIRE(rows.size() == 1);
        REQUIRE(rows[0].reports.size() == 4);
        CHECK_FALSE(rows[0].reports[0].holds);
        CHECK_FALSE(rows[0].reports[2].holds);
        CHECK_FALSE(rows[0].reports[3].holds);
        const std::string md = emit_certificates(rows, TableFormat::markdown);
        CHECK(count_lines(md) == 6);
        const std::string csv = emit_certificates(rows, TableFormat::csv);
        CHECK(count_lines(csv) == 5);
    }

    TEST_CASE("B = 0 passes theorems 1, 2 and 4") {
        // theorems 1 and 2 are trivial with Omega = 0; theorem 4 needs a positive diagonal Omega
        const GaveProblem p{SparseMatrix::from_triplets(2, 2, {{0, 0, 4}, {0, 1, -1}, {1, 0, -1}, {1, 1, 4}}),
                            SparseMatrix(2, 2), {1, 1}};
        const auto zero = certify_instance("linear", p, OmegaSpec::scalar(0.0));
        CHECK(zero.reports[0].holds);
        CHECK(*zero.reports[0].rho == 0.0);
        CHECK(zero.reports[1].holds);
        CHECK_FALSE(zero.reports[3].holds);
        CHECK_FALSE(zero.reports[3].note.empty());
        const auto diag = certify_instance("linear", p, OmegaSpec::diagonal_of_a());
        CHECK(diag.reports[0].holds);
        CHECK(diag.reports[3].holds);
    }

    TEST_CASE("errors are recorded, not thrown") {
        const GaveProblem p{SparseMatrix::from_triplets(2, 2, {{0, 0, 4}, {0, 1, 1}, {1, 1, 4}}), SparseMatrix(2, 2),
                            {1, 1}};
        const auto row = certify_instance("nonsym", p, OmegaSpec::diagonal_of_a());
        REQUIRE(row.reports.size() == 4);
        CHECK_FALSE(row.reports[2].holds);
        CHECK_FALSE(row.reports[2].note.empty());
    }
}
