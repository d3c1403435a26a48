// plbench: benchmarks and ad-hoc operations over the property-list
// backends. Subcommands: bench, run, hash, ftest.

#include "proplist/bench.hpp"
#include "proplist/core.hpp"
#include "proplist/hash.hpp"
#include "proplist/oracle.hpp"
#include "proplist/script.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace proplist;

const std::vector<BackendKind> kAllBackends = {
    BackendKind::LinkedList, BackendKind::StaticArray, BackendKind::Hash,
    BackendKind::SplayTree, BackendKind::BitmaskSet};

std::vector<BackendKind> parse_backends(const std::string& arg) {
    if (arg == "all") return kAllBackends;
    std::vector<BackendKind> out;
    std::istringstream in(arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        bool found = false;
        for (BackendKind k : kAllBackends)
            if (tok == to_string(k)) {
                out.push_back(k);
                found = true;
            }
        if (!found)
            throw CLI::ValidationError("unknown backend '" + tok +
                                       "' (list,array,hash,tree,set)");
    }
    return out;
}

std::vector<const ScriptSpec*> parse_scripts(const std::string& arg) {
    std::vector<const ScriptSpec*> out;
    if (arg == "all") {
        for (const auto& s : all_scripts()) out.push_back(&s);
        return out;
    }
    std::istringstream in(arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const ScriptSpec* s = find_script(tok);
        if (!s)
            throw CLI::ValidationError("unknown script mnemonic '" + tok +
                                       "'");
        out.push_back(s);
    }
    return out;
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"property-list backend benchmarks"};
    app.require_subcommand(1);

    std::string backends_arg = "all";
    std::string scripts_arg = "all";
    std::uint64_t seed = 1;
    int repetitions = 10000;
    int warmup = 1000;
    int preload_min = 25;
    int preload_max = 29;
    unsigned word_width = 32;
    std::string format = "md";
    std::string out_path;

    auto* bench = app.add_subcommand("bench", "run the script benchmark");
    bench->add_option("--backends", backends_arg, "all or list,array,...");
    bench->add_option("--scripts", scripts_arg, "all or ILD,IDL,...");
    bench->add_option("--seed", seed);
    bench->add_option("--repetitions", repetitions);
    bench->add_option("--warmup", warmup);
    bench->add_option("--preload-min", preload_min);
    bench->add_option("--preload-max", preload_max);
    bench->add_option("--word-width", word_width)
        ->check(CLI::IsMember({32u, 64u}));
    bench->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));
    bench->add_option("--out", out_path, "write report to file");

    std::string run_backend = "set";
    std::string run_script_arg = "ILD";
    bool check = false;
    auto* run = app.add_subcommand("run", "trace one script on one backend");
    run->add_option("--backend", run_backend)->required();
    run->add_option("--script", run_script_arg)->required();
    run->add_option("--seed", seed);
    run->add_option("--preload-min", preload_min);
    run->add_option("--preload-max", preload_max);
    run->add_option("--word-width", word_width)
        ->check(CLI::IsMember({32u, 64u}));
    run->add_flag("--check", check, "cross-check results against the oracle");

    std::string hash_name;
    std::size_t table_size = 64;
    auto* hash = app.add_subcommand("hash", "print hash intermediates");
    hash->add_option("name", hash_name)->required();
    hash->add_option("--table-size", table_size);

    std::string csv_path;
    auto* ftest = app.add_subcommand("ftest", "F test over a report CSV");
    ftest->add_option("csv", csv_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bench) {
            if (preload_min > preload_max)
                throw std::runtime_error("preload-min > preload-max");
            BenchConfig config;
            config.seed = seed;
            config.repetitions = repetitions;
            config.warmup = warmup;
            config.workload.preload_min = preload_min;
            config.workload.preload_max = preload_max;
            config.backend.word_width = word_width;
            BenchReport report = run_bench(parse_backends(backends_arg),
                                           parse_scripts(scripts_arg),
                                           config);
            write_out(format == "csv" ? to_csv(report) : to_markdown(report),
                      out_path);
        } else if (*run) {
            auto backends = parse_backends(run_backend);
            const ScriptSpec* spec = find_script(run_script_arg);
            if (!spec)
                throw std::runtime_error("unknown script mnemonic '" +
                                         run_script_arg + "'");
            if (backends.size() != 1)
                throw std::runtime_error("run takes exactly one backend");
            WorkloadConfig wc;
            wc.preload_min = preload_min;
            wc.preload_max = preload_max;
            Workload w = generate_workload(seed, *spec, wc);

            BackendOptions opts;
            opts.word_width = word_width;
            auto list = make_backend(backends[0], opts);
            OracleBackend oracle;
            bool failed = false, mismatch = false;
            auto trace = [&](const char* phase, const Op& op) {
                OpResult r = apply_op(*list, op);
                const char* k = op.kind == OpKind::Insert   ? "insert"
                                : op.kind == OpKind::Remove ? "remove"
                                                            : "lookup";
                std::cout << phase << " " << k << " " << op.name << " -> "
                          << format_result(r) << "\n";
                if (std::holds_alternative<PlError>(r)) failed = true;
                if (check && r != apply_op(oracle, op)) mismatch = true;
            };
            for (const Op& op : w.preload) trace("preload", op);
            for (const Op& op : w.script) trace("script ", op);
            if (check)
                std::cout << "oracle: " << (mismatch ? "MISMATCH" : "match")
                          << "\n";
            return (failed || mismatch) ? 1 : 0;
        } else if (*hash) {
            if (!valid_name(hash_name)) {
                std::cerr << "error: InvalidName (length must be 1.."
                          << kMaxNameLen << ")\n";
                return 1;
            }
            MidSquareTrace t = midsquare_trace(pack_name(hash_name),
                                               table_size);
            std::printf("a      = 0x%08x\n", t.a);
            std::printf("b      = 0x%08x\n", t.b);
            std::printf("c      = 0x%016llx\n",
                        (unsigned long long)t.product);
            std::printf("d      = 0x%08x\n", t.folded);
            std::printf("e      = 0x%016llx\n", (unsigned long long)t.square);
            std::printf("centre = 0x%08x\n", t.centre);
            std::printf("index  = %u\n", t.index);
        } else if (*ftest) {
            std::ifstream f(csv_path);
            if (!f) throw std::runtime_error("cannot open " + csv_path);
            std::stringstream buf;
            buf << f.rdbuf();
            CsvGroups groups = parse_report_csv(buf.str());
            if (groups.backends.size() < 2)
                throw std::runtime_error(
                    "ftest needs at least 2 backends in the CSV");
            for (std::size_t i = 0; i < groups.backends.size(); ++i) {
                double sum = 0.0;
                for (double v : groups.means[i]) sum += v;
                std::printf("%s: mean of %zu script means = %.6f\n",
                            groups.backends[i].c_str(),
                            groups.means[i].size(),
                            sum / double(groups.means[i].size()));
            }
            FTestResult r = anova_oneway(groups.means);
            std::printf("F = %.6f, df = (%d, %d), p = %.6f -> %s at 5%%\n",
                        r.f, r.df_between, r.df_within, r.p_value,
                        r.significant_at_5pct ? "significant"
                                              : "not significant");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
