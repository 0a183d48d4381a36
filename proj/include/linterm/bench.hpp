#ifndef LINTERM_BENCH_HPP
#define LINTERM_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vendor/json.hpp"

#include "decision.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "program.hpp"

// Batch experiments on randomly generated loops: per-dimension verdict counts
// with wall-clock time split by verdict. Counts are deterministic in the
// seed; times are informational and machine-bound, never asserted.

namespace linterm {

struct BenchConfig {
    std::vector<size_t> dimensions;
    size_t loops_per_set = 100;
    long entry_magnitude = 10;
    uint64_t seed = 0;
};

struct BenchRow {
    size_t dimension = 0;
    size_t count_terminating = 0;
    size_t count_nonterminating = 0;
    size_t count_failed = 0;
    double seconds_terminating = 0.0;
    double seconds_nonterminating = 0.0;
    double seconds_total = 0.0;
    // Diagnostics for programs the decision procedure rejected (e.g. a zero
    // guard row can never be drawn, but degenerate inputs are kept visible
    // rather than silently retried).
    std::vector<std::string> failures;
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchRow> rows;
};

// Uniform integer entries in [-magnitude, magnitude]; the guard row is
// redrawn until nonzero. Modulo reduction keeps the stream reproducible
// across platforms.
inline HomogeneousProgram random_program(size_t dim, long magnitude, std::mt19937_64& rng) {
    if (dim < 1) throw degenerate_input("dimension must be at least 1");
    if (magnitude < 1) throw degenerate_input("entry magnitude must be at least 1");
    const uint64_t span = 2 * static_cast<uint64_t>(magnitude) + 1;
    auto draw = [&] { return Rational(static_cast<long>(rng() % span) - magnitude); };

    Matrix<Rational> a(dim, dim, Rational(0));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) a.at(i, j) = draw();

    std::vector<Rational> f(dim, Rational(0));
    bool zero = true;
    while (zero) {
        for (size_t j = 0; j < dim; ++j) {
            f[j] = draw();
            if (!f[j].is_zero()) zero = false;
        }
    }
    return make_program(std::move(a), std::move(f));
}

inline BenchReport run_suite(const BenchConfig& config) {
    if (config.dimensions.empty()) throw degenerate_input("no dimensions configured");
    for (size_t d : config.dimensions)
        if (d < 2 || d > 8)
            throw degenerate_input("benchmark dimensions must lie in [2, 8], got " +
                                   std::to_string(d));
    if (config.loops_per_set < 1) throw degenerate_input("loops_per_set must be at least 1");
    if (config.entry_magnitude < 1) throw degenerate_input("entry magnitude must be at least 1");

    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(config.seed);
    BenchReport report{config, {}};
    for (size_t dim : config.dimensions) {
        BenchRow row;
        row.dimension = dim;
        for (size_t i = 0; i < config.loops_per_set; ++i) {
            HomogeneousProgram p = random_program(dim, config.entry_magnitude, rng);
            auto t0 = clock::now();
            try {
                Certificate cert = decide(p);
                double dt = std::chrono::duration<double>(clock::now() - t0).count();
                row.seconds_total += dt;
                if (cert.verdict == Verdict::Terminating) {
                    ++row.count_terminating;
                    row.seconds_terminating += dt;
                } else {
                    ++row.count_nonterminating;
                    row.seconds_nonterminating += dt;
                }
            } catch (const error& e) {
                row.seconds_total += std::chrono::duration<double>(clock::now() - t0).count();
                ++row.count_failed;
                row.failures.push_back("dim " + std::to_string(dim) + " program " +
                                       std::to_string(i) + ": " + e.what());
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline std::string format_table(const BenchReport& report) {
    std::ostringstream os;
    os << std::setw(4) << "dim" << std::setw(8) << "loops" << std::setw(7) << "#T" << std::setw(7)
       << "#NT" << std::setw(7) << "fail" << std::setw(12) << "CPU/s[T]" << std::setw(12)
       << "CPU/s[NT]" << std::setw(14) << "CPU/s[total]" << "\n";
    os << std::fixed << std::setprecision(3);
    for (const BenchRow& row : report.rows) {
        os << std::setw(4) << row.dimension << std::setw(8) << report.config.loops_per_set
           << std::setw(7) << row.count_terminating << std::setw(7) << row.count_nonterminating
           << std::setw(7) << row.count_failed << std::setw(12) << row.seconds_terminating
           << std::setw(12) << row.seconds_nonterminating << std::setw(14) << row.seconds_total
           << "\n";
    }
    for (const BenchRow& row : report.rows)
        for (const std::string& msg : row.failures) os << "failure: " << msg << "\n";
    return os.str();
}

inline nlohmann::json report_json(const BenchReport& report) {
    nlohmann::json doc;
    doc["format_version"] = format_version;
    doc["kind"] = "bench_report";
    doc["seed"] = report.config.seed;
    doc["loops_per_set"] = report.config.loops_per_set;
    doc["entry_magnitude"] = report.config.entry_magnitude;
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchRow& row : report.rows) {
        rows.push_back({{"dimension", row.dimension},
                        {"terminating", row.count_terminating},
                        {"nonterminating", row.count_nonterminating},
                        {"failed", row.count_failed},
                        {"seconds_terminating", row.seconds_terminating},
                        {"seconds_nonterminating", row.seconds_nonterminating},
                        {"seconds_total", row.seconds_total},
                        {"failures", row.failures}});
    }
    doc["rows"] = std::move(rows);
    return doc;
}

}  // namespace linterm

#endif
