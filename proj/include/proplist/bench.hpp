#ifndef PROPLIST_BENCH_HPP
#define PROPLIST_BENCH_HPP

#include "proplist/anova.hpp"
#include "proplist/core.hpp"
#include "proplist/script.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace proplist {

struct BenchConfig {
    std::uint64_t seed = 1;
    int repetitions = 10000;
    int warmup = 1000;
    WorkloadConfig workload;
    BackendOptions backend;
};

struct ScriptStats {
    std::string mnemonic;
    int repetitions = 0;
    double mean_ns = 0.0;
    double median_ns = 0.0;
    double stddev_ns = 0.0;
};

// Per repetition: fresh backend, preload applied untimed, then the three
// scripted operations timed as a unit with a monotonic nanosecond clock.
// Warmup repetitions run first and are discarded. Throws if any preload or
// scripted operation fails; the generator guarantees that cannot happen
// for compliant pool sizes.
std::vector<double> run_script(BackendKind kind, const Workload& workload,
                               int repetitions, int warmup,
                               const BackendOptions& opts = {});

ScriptStats summarize(std::string mnemonic, const std::vector<double>& ns);

struct BenchReport {
    std::vector<BackendKind> backends;
    std::vector<std::string> scripts;
    // stats[s][b]: script s on backend b
    std::vector<std::vector<ScriptStats>> stats;
    // arithmetic mean of the script means, per backend
    std::vector<double> backend_average_ns;
    std::optional<FTestResult> ftest;
};

BenchReport run_bench(const std::vector<BackendKind>& backends,
                      const std::vector<const ScriptSpec*>& scripts,
                      const BenchConfig& config);

// Fills backend_average_ns (mean of the per-script means) and the F test
// (groups are each backend's per-script means) from the stats matrix.
void compute_summary(BenchReport& report);

std::string to_markdown(const BenchReport& report);
std::string to_csv(const BenchReport& report);

// Parses the to_csv schema (script,backend,mean_ns,median_ns,stddev_ns)
// back into per-backend mean columns and recomputes the F test over them.
// Throws std::runtime_error with a row/column diagnostic on malformed
// input.
struct CsvGroups {
    std::vector<std::string> backends;
    std::vector<std::vector<double>> means; // per backend, per script
};
CsvGroups parse_report_csv(const std::string& text);

// Reference timing matrix (microseconds) for the 15 scripts across the
// five backends, used by the report-pipeline and ANOVA regression
// fixtures. Column order: hash, tree, list, array, set.
struct ReferenceMatrix {
    std::array<const char*, 5> columns;
    std::array<const char*, 15> scripts;
    std::array<std::array<double, 5>, 15> values_us;
};
const ReferenceMatrix& reference_times();

} // namespace proplist

#endif
