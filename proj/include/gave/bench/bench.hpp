#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gave/certificates/certificates.hpp"
#include "gave/solvers/config.hpp"

namespace gave::bench {

enum class Method { mn, nms_gs, max_based, gmres20 };

/// Table label: M-1, M-2, M-3, G-20.
[[nodiscard]] std::string_view label(Method m) noexcept;
/// CLI key: mn, nms-gs, max-based, gmres20.
[[nodiscard]] std::string_view key(Method m) noexcept;
/// Throws ConfigError for an unknown key.
[[nodiscard]] Method parse_method(std::string_view key);

enum class Source { example_3_1, example_3_2, file, random };

enum class TableFormat { markdown, csv };

/// How initial guesses are chosen across the methods of one instance.
enum class StartProtocol {
    /// every method starts from x0 = 0
    cold,
    /// each stationary method starts from the previous stationary method's
    /// final iterate (GMRES always starts from zero)
    chained,
};

struct BenchConfig {
    Source source = Source::example_3_1;
    std::filesystem::path problem_dir;
    /// Grid dimensions m (n = m^2); for Source::random the instance size n.
    std::vector<std::size_t> sizes{50, 100};
    double mu = 4.0;
    std::vector<Method> methods{Method::mn, Method::nms_gs, Method::max_based, Method::gmres20};
    OmegaSpec omega = OmegaSpec::diagonal_of_a();
    double tol = kDefaultTol;
    std::size_t k_max = kDefaultMaxIterations;
    TableFormat format = TableFormat::markdown;
    std::optional<std::filesystem::path> output;
    std::uint64_t seed = 0;
    StartProtocol protocol = StartProtocol::cold;
    /// 0 picks GAVE_THREADS or the hardware concurrency.
    std::size_t threads = 0;
    /// Run rows one at a time so timings do not interfere.
    bool timing_strict = false;

    /// Throws ConfigError.
    void validate() const;
};

struct Instance {
    std::string name;
    GaveProblem problem;
    std::optional<Vector> x_star;
};

[[nodiscard]] Instance make_instance(const BenchConfig& config, std::size_t size);

struct BenchRow {
    std::string method;
    std::size_t n = 0;
    std::size_t it = 0;
    double cpu_s = 0.0;
    double res = 0.0;
    bool converged = false;
    /// Solver error message; empty when the row ran.
    std::string error;
    /// ||x - x*||_inf when the instance carries a known solution.
    std::optional<double> error_vs_x_star;
    /// Final iterate (not printed).
    Vector x;
};

/// Runs every (method, size) pair. Rows are ordered by method then size,
/// independent of the order in which workers finish.
[[nodiscard]] std::vector<BenchRow> run_benchmark(const BenchConfig& config);

/// Markdown uses the usual layout (methods as row groups, n as
/// columns); CSV has header `method,n,it,cpu_s,res`. Throws ConfigError for
/// an empty row list.
[[nodiscard]] std::string emit_table(std::span<const BenchRow> rows, TableFormat format);

/// 1.234e-5 style scientific notation with `decimals` mantissa digits.
[[nodiscard]] std::string scientific(double value, int decimals);

struct CertificateRow {
    std::string instance;
    std::size_t n = 0;
    std::vector<ConvergenceReport> reports;
};

/// Theorem 1-4 verdicts for each configured instance. Errors (for example
/// TooLargeForDense or a non-symmetric A + B) are recorded in the report
/// note and do not stop the run.
[[nodiscard]] std::vector<CertificateRow> certify(const BenchConfig& config);
[[nodiscard]] CertificateRow certify_instance(const std::string& name, const GaveProblem& p, const OmegaSpec& omega);
[[nodiscard]] std::string emit_certificates(std::span<const CertificateRow> rows, TableFormat format);

/// Worker count honouring GAVE_THREADS and `timing_strict`.
[[nodiscard]] std::size_t worker_count(const BenchConfig& config, std::size_t jobs);

}  // namespace gave::bench
