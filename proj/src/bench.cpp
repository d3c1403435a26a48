#include "proplist/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace proplist {

namespace {

void must_apply(PropertyList& list, const Op& op) {
    OpResult r = apply_op(list, op);
    if (const auto* e = std::get_if<PlError>(&r))
        throw std::runtime_error(std::string("benchmark op failed (") +
                                 to_string(*e) +
                                 "): workload generation bug");
}

} // namespace

std::vector<double> run_script(BackendKind kind, const Workload& workload,
                               int repetitions, int warmup,
                               const BackendOptions& opts) {
    if (repetitions < 1)
        throw std::invalid_argument("repetitions must be >= 1");
    using clock = std::chrono::steady_clock;

    std::vector<double> samples;
    samples.reserve(std::size_t(repetitions));
    for (int rep = 0; rep < warmup + repetitions; ++rep) {
        auto list = make_backend(kind, opts);
        for (const Op& op : workload.preload) must_apply(*list, op);
        auto t0 = clock::now();
        for (const Op& op : workload.script) must_apply(*list, op);
        auto t1 = clock::now();
        if (rep >= warmup)
            samples.push_back(double(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count()));
    }
    return samples;
}

ScriptStats summarize(std::string mnemonic, const std::vector<double>& ns) {
    ScriptStats s;
    s.mnemonic = std::move(mnemonic);
    s.repetitions = int(ns.size());
    if (ns.empty()) return s;
    double sum = 0.0;
    for (double v : ns) sum += v;
    s.mean_ns = sum / double(ns.size());
    double sq = 0.0;
    for (double v : ns) sq += (v - s.mean_ns) * (v - s.mean_ns);
    s.stddev_ns = ns.size() > 1 ? std::sqrt(sq / double(ns.size() - 1)) : 0.0;
    std::vector<double> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    std::size_t mid = sorted.size() / 2;
    s.median_ns = sorted.size() % 2 ? sorted[mid]
                                    : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return s;
}

BenchReport run_bench(const std::vector<BackendKind>& backends,
                      const std::vector<const ScriptSpec*>& scripts,
                      const BenchConfig& config) {
    BenchReport report;
    report.backends = backends;
    report.stats.resize(scripts.size());
    for (std::size_t si = 0; si < scripts.size(); ++si) {
        report.scripts.push_back(scripts[si]->mnemonic);
        Workload w = generate_workload(config.seed, *scripts[si],
                                       config.workload);
        for (BackendKind b : backends) {
            auto samples = run_script(b, w, config.repetitions,
                                      config.warmup, config.backend);
            report.stats[si].push_back(
                summarize(scripts[si]->mnemonic, samples));
        }
    }

    compute_summary(report);
    return report;
}

void compute_summary(BenchReport& report) {
    std::size_t nb = report.backends.size();
    std::size_t ns = report.scripts.size();
    report.backend_average_ns.assign(nb, 0.0);
    for (std::size_t bi = 0; bi < nb; ++bi) {
        double sum = 0.0;
        for (std::size_t si = 0; si < ns; ++si)
            sum += report.stats[si][bi].mean_ns;
        report.backend_average_ns[bi] = ns == 0 ? 0.0 : sum / double(ns);
    }
    // Groups are the per-script means of each backend; the test needs two
    // scripts per group at minimum.
    if (nb >= 2 && ns >= 2) {
        std::vector<std::vector<double>> groups(nb);
        for (std::size_t bi = 0; bi < nb; ++bi)
            for (std::size_t si = 0; si < ns; ++si)
                groups[bi].push_back(report.stats[si][bi].mean_ns);
        report.ftest = anova_oneway(groups);
    }
}

std::string to_markdown(const BenchReport& report) {
    std::ostringstream out;
    out << "| script |";
    for (BackendKind b : report.backends)
        out << " " << to_string(b) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < report.backends.size(); ++i) out << "---|";
    out << "\n";
    out.setf(std::ios::fixed);
    out.precision(1);
    for (std::size_t si = 0; si < report.scripts.size(); ++si) {
        out << "| " << report.scripts[si] << " |";
        for (std::size_t bi = 0; bi < report.backends.size(); ++bi)
            out << " " << report.stats[si][bi].mean_ns << " |";
        out << "\n";
    }
    out << "| average |";
    for (double avg : report.backend_average_ns) out << " " << avg << " |";
    out << "\n";
    if (report.ftest) {
        out.precision(4);
        out << "\nF-test: F = " << report.ftest->f << ", df = ("
            << report.ftest->df_between << ", " << report.ftest->df_within
            << "), p = " << report.ftest->p_value << " -> "
            << (report.ftest->significant_at_5pct ? "significant"
                                                  : "not significant")
            << " at 5%\n";
    }
    return out.str();
}

std::string to_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "script,backend,mean_ns,median_ns,stddev_ns\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    for (std::size_t si = 0; si < report.scripts.size(); ++si)
        for (std::size_t bi = 0; bi < report.backends.size(); ++bi) {
            const ScriptStats& s = report.stats[si][bi];
            out << report.scripts[si] << ","
                << to_string(report.backends[bi]) << "," << s.mean_ns << ","
                << s.median_ns << "," << s.stddev_ns << "\n";
        }
    return out.str();
}

CsvGroups parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("csv: empty input");
    if (line.rfind("script,backend,mean_ns", 0) != 0)
        throw std::runtime_error("csv row 1: unexpected header '" + line +
                                 "'");
    std::map<std::string, std::size_t> index;
    CsvGroups groups;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (fields.size() != 5)
            throw std::runtime_error("csv row " + std::to_string(row) +
                                     ": expected 5 columns, got " +
                                     std::to_string(fields.size()));
        double mean;
        try {
            mean = std::stod(fields[2]);
        } catch (const std::exception&) {
            throw std::runtime_error("csv row " + std::to_string(row) +
                                     " column 3: not a number '" +
                                     fields[2] + "'");
        }
        auto [it, fresh] = index.try_emplace(fields[1], groups.means.size());
        if (fresh) {
            groups.backends.push_back(fields[1]);
            groups.means.emplace_back();
        }
        groups.means[it->second].push_back(mean);
    }
    return groups;
}

const ReferenceMatrix& reference_times() {
    static const ReferenceMatrix m = {
        {"hash", "tree", "list", "array", "set"},
        {"ILD", "IDL", "LID", "LDI", "DIL", "DLI", "III", "IIL", "IID",
         "DDD", "DDI", "DDL", "LLL", "LLD", "LLI"},
        {{
            {0.09, 0.10, 0.15, 0.18, 0.07},
            {0.09, 0.15, 0.21, 0.20, 0.13},
            {0.09, 0.14, 0.17, 0.17, 0.14},
            {0.12, 0.20, 0.18, 0.19, 0.08},
            {0.09, 0.17, 0.12, 0.18, 0.08},
            {0.10, 0.20, 0.22, 0.18, 0.07},
            {0.09, 0.10, 0.14, 0.11, 0.07},
            {0.14, 0.18, 0.15, 0.15, 0.11},
            {0.08, 0.10, 0.12, 0.17, 0.09},
            {0.11, 0.19, 0.14, 0.23, 0.08},
            {0.10, 0.12, 0.15, 0.17, 0.12},
            {0.09, 0.12, 0.15, 0.23, 0.10},
            {0.12, 0.19, 0.13, 0.15, 0.06},
            {0.07, 0.10, 0.19, 0.10, 0.09},
            {0.06, 0.18, 0.18, 0.14, 0.07},
        }},
    };
    return m;
}

} // namespace proplist
