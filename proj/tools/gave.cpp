// gave: command-line driver for the GAVE solver toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "gave/bench/bench.hpp"
#include "gave/error.hpp"
#include "gave/matrixlab/matrix_market.hpp"
#include "gave/problems/lattice.hpp"
#include "gave/problems/oracle.hpp"
#include "gave/problems/problem_io.hpp"
#include "gave/solvers/methods.hpp"

namespace {

using namespace gave;

OmegaSpec parse_omega(const std::string& text) {
    if (text == "diag") return OmegaSpec::diagonal_of_a();
    if (text == "zero") return OmegaSpec::scalar(0.0);
    if (text.rfind("scalar:", 0) == 0) {
        try {
            return OmegaSpec::scalar(std::stod(text.substr(7)));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ConfigError, "bad omega scalar '" + text + "'");
        }
    }
    return OmegaSpec::explicit_matrix(read_matrix_market(std::filesystem::path(text)));
}

bench::Source parse_example(const std::string& text) {
    if (text == "3.1") return bench::Source::example_3_1;
    if (text == "3.2") return bench::Source::example_3_2;
    if (text == "random") return bench::Source::random;
    throw Error(ErrorCode::ConfigError, "unknown example '" + text + "' (expected 3.1, 3.2 or random)");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            sizes.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ConfigError, "bad size '" + item + "'");
        }
    }
    return sizes;
}

std::vector<bench::Method> parse_methods(const std::string& text) {
    std::vector<bench::Method> methods;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) methods.push_back(bench::parse_method(item));
    }
    return methods;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
}

struct CommonOptions {
    std::string example = "3.1";
    std::string problem;
    std::string sizes = "50,100";
    double mu = 4.0;
    std::string omega = "diag";
    double tol = kDefaultTol;
    std::size_t kmax = kDefaultMaxIterations;
    std::string format = "markdown";
    std::string out;
    std::uint64_t seed = 0;

    [[nodiscard]] bench::BenchConfig to_config() const {
        bench::BenchConfig c;
        if (!problem.empty()) {
            c.source = bench::Source::file;
            c.problem_dir = problem;
            c.sizes = {0};
        } else {
            c.source = parse_example(example);
            c.sizes = parse_sizes(sizes);
        }
        c.mu = mu;
        c.omega = parse_omega(omega);
        c.tol = tol;
        c.k_max = kmax;
        if (format == "markdown") {
            c.format = bench::TableFormat::markdown;
        } else if (format == "csv") {
            c.format = bench::TableFormat::csv;
        } else {
            throw Error(ErrorCode::ConfigError, "unknown format '" + format + "'");
        }
        if (!out.empty()) c.output = out;
        c.seed = seed;
        return c;
    }
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_sizes) {
    cmd->add_option("--example", o.example, "Generated instance family: 3.1, 3.2 or random");
    cmd->add_option("--problem", o.problem, "Problem directory (A.mtx, B.mtx, b.txt, optional xstar.txt)");
    if (with_sizes) cmd->add_option("--sizes", o.sizes, "Comma-separated grid sizes m (n = m^2)");
    cmd->add_option("--mu", o.mu, "Diagonal shift of the lattice examples");
    cmd->add_option("--omega", o.omega, "diag | zero | scalar:W | path to a Matrix Market file");
    cmd->add_option("--tol", o.tol, "Relative residual tolerance");
    cmd->add_option("--kmax", o.kmax, "Iteration cap");
    cmd->add_option("--format", o.format, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));
    cmd->add_option("--out", o.out, "Output file (stdout when omitted)");
    cmd->add_option("--seed", o.seed, "Seed for the random instance family");
}

int run_bench(const CommonOptions& o, const std::string& methods, const std::string& protocol,
              std::size_t threads, bool timing_strict) {
    bench::BenchConfig c = o.to_config();
    c.methods = parse_methods(methods);
    c.protocol = protocol == "chained" ? bench::StartProtocol::chained : bench::StartProtocol::cold;
    c.threads = threads;
    c.timing_strict = timing_strict;
    const auto rows = bench::run_benchmark(c);
    write_output(bench::emit_table(rows, c.format), o.out);
    const bool all_converged =
        std::all_of(rows.begin(), rows.end(), [](const bench::BenchRow& r) { return r.error.empty() && r.converged; });
    return all_converged ? 0 : 1;
}

int run_solve(const CommonOptions& o, std::size_t m, const std::string& method, const std::string& x0_path,
              bool show_log) {
    bench::BenchConfig c = o.to_config();
    if (c.source != bench::Source::file) c.sizes = {m};
    const bench::Instance inst = bench::make_instance(c, c.sizes.front());

    SolverConfig sc;
    sc.omega = c.omega;
    sc.tol = c.tol;
    sc.k_max = c.k_max;
    if (!x0_path.empty()) sc.x0 = read_vector(std::filesystem::path(x0_path));

    SolveReport report;
    if (method == "mn") {
        report = solve_mn(inst.problem, sc);
    } else if (method == "nms-gs") {
        report = solve_nms(inst.problem, sc, SplittingStrategy::gauss_seidel());
    } else if (method == "max-based") {
        report = solve_max_based(inst.problem, sc);
    } else if (method == "gmres20") {
        report = solve_sign_reduced(inst.problem, sc, AssumedSign::nonpositive, LinearBackend::gmres, 20);
    } else if (method == "direct-nonpositive" || method == "direct-positive") {
        const AssumedSign s = method == "direct-positive" ? AssumedSign::positive : AssumedSign::nonpositive;
        report = solve_sign_reduced(inst.problem, sc, s, LinearBackend::direct);
    } else {
        throw Error(ErrorCode::ConfigError, "unknown method '" + method + "'");
    }

    std::ostream& log = o.out.empty() ? std::cerr : std::cout;
    log << "instance = " << inst.name << '\n';
    log << "n = " << inst.problem.size() << '\n';
    log << "method = " << method << '\n';
    log << "iterations = " << report.iterations << '\n';
    log << "converged = " << (report.converged ? "true" : "false") << '\n';
    log << "stop = " << to_string(report.stop) << '\n';
    log << "res = " << bench::scientific(residual(inst.problem, report.x), 4) << '\n';
    log << "cpu_s = " << bench::scientific(report.wall_time, 3) << '\n';
    if (report.sign_consistent) log << "sign_consistent = " << (*report.sign_consistent ? "true" : "false") << '\n';
    if (inst.x_star) log << "error_vs_xstar = " << bench::scientific(distance_inf(report.x, *inst.x_star), 4) << '\n';
    if (show_log) {
        for (std::size_t k = 0; k < report.residual_log.size(); ++k) {
            log << "res[" << k + 1 << "] = " << bench::scientific(report.residual_log[k], 4) << '\n';
        }
    }
    if (!o.out.empty()) {
        write_vector(std::filesystem::path(o.out), report.x);
    } else {
        write_vector(std::cout, report.x);
    }
    return report.converged ? 0 : 1;
}

int run_certify(const CommonOptions& o) {
    const bench::BenchConfig c = o.to_config();
    const auto rows = bench::certify(c);
    if (c.source == bench::Source::file && c.format == bench::TableFormat::markdown && o.out.empty()) {
        for (const auto& r : rows.front().reports) std::cout << to_key_value(r) << '\n';
        return 0;
    }
    write_output(bench::emit_certificates(rows, c.format), o.out);
    return 0;
}

int run_oracle(const std::string& problem, std::size_t threads) {
    const StoredProblem stored = read_problem_dir(problem);
    const std::size_t workers = threads > 0 ? threads : std::max(1U, std::thread::hardware_concurrency());
    const auto solutions = sign_enumeration_oracle(stored.problem, workers);
    std::cout << "solutions = " << solutions.size() << '\n';
    std::cout << std::setprecision(17);
    for (std::size_t k = 0; k < solutions.size(); ++k) {
        std::cout << "solution[" << k << "] residual = "
                  << bench::scientific(residual(stored.problem, solutions[k].x), 4) << '\n';
        for (double v : solutions[k].x) std::cout << v << '\n';
    }
    return solutions.size() == 1 ? 0 : 1;
}

int run_generate(const std::string& example, std::size_t m, double mu, const std::string& out) {
    const bench::Source s = parse_example(example);
    if (s == bench::Source::random) throw Error(ErrorCode::ConfigError, "generate supports 3.1 and 3.2");
    const LcpProblem lcp = generate_lattice(
        {m, mu, s == bench::Source::example_3_1 ? LatticeVariant::symmetric : LatticeVariant::nonsymmetric});
    const ConvertedLcp converted = lcp_to_gave(lcp);
    write_problem_dir(out, converted.problem,
                      converted.witness ? std::optional<Vector>(converted.witness->x_star) : std::nullopt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers and convergence checks for the generalized absolute value equation Ax - B|x| = b"};
    app.require_subcommand(1);

    CommonOptions bench_opts;
    std::string methods = "mn,nms-gs,max-based,gmres20";
    std::string protocol = "cold";
    std::size_t threads = 0;
    bool timing_strict = false;
    auto* bench_cmd = app.add_subcommand("bench", "Run the solver comparison and print an IT/CPU/RES table");
    add_common(bench_cmd, bench_opts, true);
    bench_cmd->add_option("--methods", methods, "Subset of mn,nms-gs,max-based,gmres20");
    bench_cmd->add_option("--protocol", protocol, "cold (x0 = 0 for every method) or chained")
        ->check(CLI::IsMember({"cold", "chained"}));
    bench_cmd->add_option("--threads", threads, "Worker count (default: GAVE_THREADS or all cores)");
    bench_cmd->add_flag("--timing-strict", timing_strict, "Run rows sequentially for clean timings");

    CommonOptions solve_opts;
    std::size_t m = 50;
    std::string method = "max-based";
    std::string x0_path;
    bool show_log = false;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print the final iterate");
    add_common(solve_cmd, solve_opts, false);
    solve_cmd->add_option("--m", m, "Grid size for generated examples");
    solve_cmd->add_option("--method", method,
                          "mn | nms-gs | max-based | gmres20 | direct-nonpositive | direct-positive");
    solve_cmd->add_option("--x0", x0_path, "Initial guess vector file");
    solve_cmd->add_flag("--log", show_log, "Print the per-iteration residual log");

    CommonOptions cert_opts;
    auto* cert_cmd = app.add_subcommand("certify", "Evaluate the four sufficient convergence conditions");
    add_common(cert_cmd, cert_opts, true);
    cert_opts.sizes = "2";

    std::string oracle_problem;
    std::size_t oracle_threads = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate all solutions of a small problem (n <= 20)");
    oracle_cmd->add_option("--problem", oracle_problem, "Problem directory")->required();
    oracle_cmd->add_option("--threads", oracle_threads, "Worker count");

    std::string gen_example = "3.1";
    std::size_t gen_m = 2;
    double gen_mu = 4.0;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("generate", "Write a lattice example as a problem directory");
    gen_cmd->add_option("--example", gen_example, "3.1 or 3.2");
    gen_cmd->add_option("--m", gen_m, "Grid size (n = m^2)");
    gen_cmd->add_option("--mu", gen_mu, "Diagonal shift");
    gen_cmd->add_option("--out", gen_out, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bench_cmd) return run_bench(bench_opts, methods, protocol, threads, timing_strict);
        if (*solve_cmd) return run_solve(solve_opts, m, method, x0_path, show_log);
        if (*cert_cmd) return run_certify(cert_opts);
        if (*oracle_cmd) return run_oracle(oracle_problem, oracle_threads);
        if (*gen_cmd) return run_generate(gen_example, gen_m, gen_mu, gen_out);
    } catch (const Error& e) {
        std::cerr << "gave: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gave: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
