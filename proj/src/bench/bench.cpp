#include "gave/bench/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "gave/error.hpp"
#include "gave/problems/lattice.hpp"
#include "gave/problems/problem_io.hpp"
#include "gave/problems/random_instances.hpp"
#include "gave/solvers/methods.hpp"

namespace gave::bench {

std::string_view label(Method m) noexcept {
    switch (m) {
        case Method::mn: return "M-1";
        case Method::nms_gs: return "M-2";
        case Method::max_based: return "M-3";
        case Method::gmres20: return "G-20";
    }
    return "?";
}

std::string_view key(Method m) noexcept {
    switch (m) {
        case Method::mn: return "mn";
        case Method::nms_gs: return "nms-gs";
        case Method::max_based: return "max-based";
        case Method::gmres20: return "gmres20";
    }
    return "?";
}

Method parse_method(std::string_view k) {
    for (Method m : {Method::mn, Method::nms_gs, Method::max_based, Method::gmres20}) {
        if (k == key(m) || k == label(m)) return m;
    }
    throw Error(ErrorCode::ConfigError, "unknown method '" + std::string(k) + "'");
}

void BenchConfig::validate() const {
    if (sizes.empty()) throw Error(ErrorCode::ConfigError, "size list is empty");
    if (methods.empty()) throw Error(ErrorCode::ConfigError, "method list is empty");
    if (!(tol > 0.0)) throw Error(ErrorCode::ConfigError, "tol must be > 0");
    if (k_max < 1) throw Error(ErrorCode::ConfigError, "kmax must be >= 1");
    if (source == Source::file && problem_dir.empty()) throw Error(ErrorCode::ConfigError, "no problem directory");
    // a problem directory is a single instance; its size entry is unused
    for (std::size_t s : sizes) {
        if (s == 0 && source != Source::file) throw Error(ErrorCode::ConfigError, "sizes must be positive");
    }
}

Instance make_instance(const BenchConfig& config, std::size_t size) {
    Instance inst;
    switch (config.source) {
        case Source::example_3_1:
        case Source::example_3_2: {
            const bool sym = config.source == Source::example_3_1;
            const LcpProblem lcp = generate_lattice(
                {size, config.mu, sym ? LatticeVariant::symmetric : LatticeVariant::nonsymmetric});
            ConvertedLcp converted = lcp_to_gave(lcp);
            inst.name = std::string(sym ? "example-3.1" : "example-3.2") + " m=" + std::to_string(size);
            inst.problem = std::move(converted.problem);
            if (converted.witness) inst.x_star = std::move(converted.witness->x_star);
            break;
        }
        case Source::file: {
            StoredProblem stored = read_problem_dir(config.problem_dir);
            inst.name = config.problem_dir.string();
            inst.problem = std::move(stored.problem);
            inst.x_star = std::move(stored.x_star);
            break;
        }
        case Source::random: {
            std::mt19937_64 rng(config.seed + size);
            DominantInstance d = random_dominant_instance({size, 0.1, 0.5}, rng);
            inst.name = "random n=" + std::to_string(size) + " seed=" + std::to_string(config.seed);
            inst.problem = std::move(d.problem);
            inst.x_star = std::move(d.x_star);
            break;
        }
    }
    return inst;
}

std::size_t worker_count(const BenchConfig& config, std::size_t jobs) {
    if (config.timing_strict) return 1;
    std::size_t w = config.threads;
    if (w == 0) {
        w = std::max<std::size_t>(1, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("GAVE_THREADS")) {
            const long cap = std::strtol(env, nullptr, 10);
            if (cap > 0) w = std::min(w, static_cast<std::size_t>(cap));
        }
    }
    return std::clamp<std::size_t>(w, 1, std::max<std::size_t>(jobs, 1));
}

namespace {

BenchRow run_method(Method method, const Instance& inst, const BenchConfig& config,
                    const std::optional<Vector>& start) {
    BenchRow row;
    row.method = std::string(label(method));
    row.n = inst.problem.size();
    SolverConfig sc;
    sc.omega = config.omega;
    sc.tol = config.tol;
    sc.k_max = config.k_max;
    sc.x0 = start;
    try {
        SolveReport report;
        switch (method) {
            case Method::mn: report = solve_mn(inst.problem, sc); break;
            case Method::nms_gs: report = solve_nms(inst.problem, sc, SplittingStrategy::gauss_seidel()); break;
            case Method::max_based: report = solve_max_based(inst.problem, sc); break;
            case Method::gmres20:
                report = solve_sign_reduced(inst.problem, sc, AssumedSign::nonpositive, LinearBackend::gmres, 20);
                break;
        }
        row.it = report.iterations;
        row.cpu_s = report.wall_time;
        row.res = residual(inst.problem, report.x);
        row.converged = report.converged;
        if (inst.x_star) row.error_vs_x_star = distance_inf(report.x, *inst.x_star);
        row.x = std::move(report.x);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<BenchRow> run_instance(const BenchConfig& config, std::size_t size) {
    std::vector<BenchRow> rows;
    Instance inst;
    try {
        inst = make_instance(config, size);
    } catch (const std::exception& e) {
        for (Method m : config.methods) {
            BenchRow row;
            row.method = std::string(label(m));
            row.n = config.source == Source::random ? size : size * size;
            row.error = e.what();
            rows.push_back(std::move(row));
        }
        return rows;
    }
    std::optional<Vector> carried;
    for (Method m : config.methods) {
        const bool chain = config.protocol == StartProtocol::chained && m != Method::gmres20;
        BenchRow row = run_method(m, inst, config, chain ? carried : std::nullopt);
        if (chain && row.error.empty()) carried = row.x;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
    config.validate();
    const std::size_t jobs = config.sizes.size();
    std::vector<std::vector<BenchRow>> per_size(jobs);
    const std::size_t workers = worker_count(config, jobs);
    if (workers <= 1) {
        for (std::size_t s = 0; s < jobs; ++s) per_size[s] = run_instance(config, config.sizes[s]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t s = next++; s < jobs; s = next++) per_size[s] = run_instance(config, config.sizes[s]);
            });
        }
    }

    // order by method, then by the configured size order
    std::vector<BenchRow> rows;
    rows.reserve(jobs * config.methods.size());
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        for (std::size_t s = 0; s < jobs; ++s) rows.push_back(per_size[s][mi]);
    }
    return rows;
}

std::string scientific(double value, int decimals) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", decimals, value);
    std::string s(buf);
    const auto e = s.find('e');
    std::string mantissa = s.substr(0, e);
    std::string exponent = s.substr(e + 1);
    std::string sign;
    if (!exponent.empty() && (exponent[0] == '+' || exponent[0] == '-')) {
        if (exponent[0] == '-') sign = "-";
        exponent.erase(0, 1);
    }
    exponent.erase(0, std::min(exponent.find_first_not_of('0'), exponent.size() - 1));
    return mantissa + "e" + sign + exponent;
}

std::string emit_table(std::span<const BenchRow> rows, TableFormat format) {
    if (rows.empty()) throw Error(ErrorCode::ConfigError, "no rows to emit");
    std::ostringstream os;
    if (format == TableFormat::csv) {
        os << "method,n,it,cpu_s,res\n";
        for (const auto& r : rows) {
            os << r.method << ',' << r.n << ',';
            if (r.error.empty()) {
                os << r.it << ',' << scientific(r.cpu_s, 3) << ',' << scientific(r.res, 4);
            } else {
                os << ",,";
            }
            os << '\n';
        }
        return os.str();
    }

    std::vector<std::string> methods;
    std::vector<std::size_t> sizes;
    for (const auto& r : rows) {
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
        if (std::find(sizes.begin(), sizes.end(), r.n) == sizes.end()) sizes.push_back(r.n);
    }
    std::map<std::pair<std::string, std::size_t>, const BenchRow*> index;
    for (const auto& r : rows) index[{r.method, r.n}] = &r;

    os << "| | n |";
    for (std::size_t n : sizes) os << ' ' << n << " |";
    os << "\n|---|---|";
    for (std::size_t i = 0; i < sizes.size(); ++i) os << "---|";
    os << '\n';
    std::vector<std::string> notes;
    for (const auto& m : methods) {
        for (const char* field : {"IT", "CPU", "RES"}) {
            os << "| " << (field[0] == 'I' ? m : std::string()) << " | " << field << " |";
            for (std::size_t n : sizes) {
                const auto it = index.find({m, n});
                std::string cell = "-";
                if (it != index.end()) {
                    const BenchRow& r = *it->second;
                    if (!r.error.empty()) {
                        cell = "error";
                    } else if (field[0] == 'I') {
                        cell = std::to_string(r.it) + (r.converged ? "" : "*");
                    } else if (field[0] == 'C') {
                        cell = scientific(r.cpu_s, 3);
                    } else {
                        cell = scientific(r.res, 4);
                    }
                }
                os << ' ' << cell << " |";
            }
            os << '\n';
        }
    }
    for (const auto& r : rows) {
        if (!r.error.empty()) notes.push_back(r.method + " n=" + std::to_string(r.n) + ": " + r.error);
    }
    if (std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.error.empty() && !r.converged; })) {
        notes.insert(notes.begin(), "* not converged within kmax");
    }
    if (!notes.empty()) {
        os << '\n';
        for (const auto& note : notes) os << note << '\n';
    }
    return os.str();
}

CertificateRow certify_instance(const std::string& name, const GaveProblem& p, const OmegaSpec& omega_spec) {
    CertificateRow row;
    row.instance = name;
    row.n = p.size();
    SparseMatrix omega;
    try {
        omega = omega_spec.build(p);
    } catch (const std::exception& e) {
        for (int id = 1; id <= 4; ++id) {
            ConvergenceReport r;
            r.theorem_id = id;
            r.note = e.what();
            row.reports.push_back(std::move(r));
        }
        return row;
    }
    auto guarded = [&](int id, auto&& fn) {
        try {
            row.reports.push_back(fn());
        } catch (const std::exception& e) {
            ConvergenceReport r;
            r.theorem_id = id;
            r.note = e.what();
            row.reports.push_back(std::move(r));
        }
    };
    guarded(1, [&] { return check_theorem1(p, omega); });
    guarded(2, [&] { return check_theorem2(p, omega); });
    guarded(3, [&] {
        // the verdict does not depend on w; record the scalar that Omega represents
        double w = 1.0;
        std::string note;
        if (omega_spec.kind() == OmegaSpec::Kind::scalar) {
            w = omega_spec.scalar_value();
        } else {
            const Vector d = omega.diagonal_values();
            const bool constant = omega.is_diagonal() && !d.empty() &&
                                  std::all_of(d.begin(), d.end(), [&](double v) { return v == d.front(); });
            if (constant && d.front() > 0.0) {
                w = d.front();
            } else {
                note = "Omega is not a positive multiple of I; evaluated with w = 1";
            }
        }
        ConvergenceReport r = check_theorem3(p, w);
        if (!note.empty()) r.note = note;
        return r;
    });
    guarded(4, [&] { return check_theorem4(p, omega); });
    return row;
}

std::vector<CertificateRow> certify(const BenchConfig& config) {
    config.validate();
    std::vector<CertificateRow> rows;
    if (config.source == Source::file) {
        const Instance inst = make_instance(config, 0);
        rows.push_back(certify_instance(inst.name, inst.problem, config.omega));
        return rows;
    }
    for (std::size_t size : config.sizes) {
        try {
            const Instance inst = make_instance(config, size);
            rows.push_back(certify_instance(inst.name, inst.problem, config.omega));
        } catch (const std::exception& e) {
            CertificateRow row;
            row.instance = "size " + std::to_string(size);
            ConvergenceReport r;
            r.note = e.what();
            row.reports.push_back(std::move(r));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string emit_certificates(std::span<const CertificateRow> rows, TableFormat format) {
    if (rows.empty()) throw Error(ErrorCode::ConfigError, "no certificate rows to emit");
    std::ostringstream os;
    auto num = [](const std::optional<double>& v) { return v ? scientific(*v, 4) : std::string(); };
    if (format == TableFormat::csv) {
        os << "instance,n," << certificate_csv_header() << ",note\n";
        for (const auto& row : rows) {
            for (const auto& r : row.reports) {
                std::string note = r.note;
                std::replace(note.begin(), note.end(), ',', ';');
                os << '"' << row.instance << "\"," << row.n << ',' << to_csv_row(r) << ',' << note << '\n';
            }
        }
        return os.str();
    }
    os << "| instance | n | theorem | holds | lhs | rhs | margin | note |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : rows) {
        for (const auto& r : row.reports) {
            os << "| " << row.instance << " | " << row.n << " | " << r.theorem_id << " | "
               << (r.holds ? "yes" : "no") << " | " << num(r.lhs) << " | " << num(r.rhs) << " | " << num(r.margin)
               << " | ";
            std::string sep;
            if (!r.note.empty()) {
                os << r.note;
                sep = "; ";
            }
            for (const auto& [name, verdict] : r.verdicts) {
                os << sep << name << ": " << (verdict.holds ? "yes" : "no");
                sep = "; ";
            }
            os << " |\n";
        }
    }
    return os.str();
}

}  // namespace gave::bench
