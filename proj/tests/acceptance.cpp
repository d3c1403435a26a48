// Acceptance suite: one pass/fail line per criterion. Exit code is
// nonzero if any hard criterion fails; criterion 7 is advisory and only
// reports.

#include "proplist/bench.hpp"
#include "proplist/bitmask.hpp"
#include "proplist/core.hpp"
#include "proplist/hash.hpp"
#include "proplist/linked_list.hpp"
#include "proplist/oracle.hpp"
#include "proplist/script.hpp"
#include "proplist/splay.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace proplist;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail,
            bool advisory = false) {
    const char* verdict = pass ? "PASS" : (advisory ? "ADVISORY" : "FAIL");
    std::printf("criterion %d: %s - %s\n", criterion, verdict,
                detail.c_str());
    if (!pass && !advisory) ++failures;
}

std::vector<Op> random_pool_ops(std::mt19937_64& rng, std::size_t n_ops,
                                const std::vector<std::string>& pool) {
    std::uniform_int_distribution<int> kind_dist(0, 2);
    std::uniform_int_distribution<std::size_t> name_dist(0, pool.size() - 1);
    std::vector<Op> ops;
    ops.reserve(n_ops);
    for (std::size_t i = 0; i < n_ops; ++i) {
        Op op;
        op.kind = static_cast<OpKind>(kind_dist(rng));
        op.name = pool[name_dist(rng)];
        if (op.kind == OpKind::Insert)
            op.value = "v" + std::to_string(rng() % 1000);
        ops.push_back(std::move(op));
    }
    return ops;
}

bool bitmask_consistent(const BitmaskBackend& bm) {
    if (std::popcount(bm.set_contents()) != int(bm.size())) return false;
    for (unsigned i = 0; i < bm.word_width(); ++i) {
        bool bit = (bm.set_contents() >> i) & 1;
        if (bit == bm.slot_name(i).empty()) return false;
    }
    return true;
}

// Criteria 1 and 5 share one pass over the scripts: element-wise result
// equality of every backend against the oracle, and the bitmask bit/slot
// invariants after every operation.
void run_equivalence(bool& equal_ok, std::uint64_t& bad_seed,
                     bool& mask_ok) {
    equal_ok = true;
    mask_ok = true;
    std::vector<std::string> pool;
    for (int i = 0; i < 32; ++i) pool.push_back("k" + std::to_string(i));

    for (std::uint64_t seed = 1; seed <= 1000 && equal_ok; ++seed) {
        std::mt19937_64 rng(seed);
        auto ops = random_pool_ops(rng, 10000, pool);

        OracleBackend oracle;
        LinkedListBackend list;
        auto array = make_backend(BackendKind::StaticArray);
        HashBackend hash;
        SplayBackend tree;
        BitmaskBackend set(32);
        PropertyList* backends[] = {&list, array.get(), &hash, &tree, &set};

        for (const Op& op : ops) {
            OpResult expected = apply_op(oracle, op);
            for (PropertyList* b : backends) {
                if (apply_op(*b, op) != expected) {
                    equal_ok = false;
                    bad_seed = seed;
                    break;
                }
            }
            if (!bitmask_consistent(set)) mask_ok = false;
            if (!equal_ok) break;
        }
        if (equal_ok) {
            for (PropertyList* b : backends)
                if (b->size() != oracle.size()) {
                    equal_ok = false;
                    bad_seed = seed;
                }
        }
    }
}

std::uint32_t wide_oracle_hash(std::uint32_t a, std::uint32_t b,
                               std::size_t m) {
    unsigned __int128 c = (unsigned __int128)a * b;
    unsigned __int128 d = ((c >> 32) + (c & 0xFFFFFFFFu)) & 0xFFFFFFFFu;
    unsigned __int128 e = d * d;
    return std::uint32_t(((e >> 16) & 0xFFFFFFFFu) % m);
}

} // namespace

int main() {
    // 1 + 5: oracle equivalence and bitmask algebra over the same scripts.
    bool equal_ok = false, mask_ok = false;
    std::uint64_t bad_seed = 0;
    run_equivalence(equal_ok, bad_seed, mask_ok);
    report(1, equal_ok,
           equal_ok ? "1000 scripts x 10000 ops: all backends match the "
                      "oracle element-wise"
                    : "trace mismatch at seed " + std::to_string(bad_seed));

    // 2: reference-matrix averages through the report pipeline.
    {
        const ReferenceMatrix& m = reference_times();
        BenchReport r;
        r.backends = {BackendKind::Hash, BackendKind::SplayTree,
                      BackendKind::LinkedList, BackendKind::StaticArray,
                      BackendKind::BitmaskSet};
        r.stats.resize(m.scripts.size());
        for (std::size_t si = 0; si < m.scripts.size(); ++si) {
            r.scripts.push_back(m.scripts[si]);
            for (std::size_t bi = 0; bi < 5; ++bi) {
                ScriptStats s;
                s.mnemonic = m.scripts[si];
                s.repetitions = 1;
                s.mean_ns = s.median_ns = m.values_us[si][bi];
                r.stats[si].push_back(s);
            }
        }
        compute_summary(r);
        const double expected[] = {0.096, 0.149, 0.160, 0.170, 0.091};
        bool ok = true;
        for (std::size_t i = 0; i < 5; ++i)
            ok = ok &&
                 std::fabs(r.backend_average_ns[i] - expected[i]) <= 0.0005;
        report(2, ok,
               "reference averages 0.096/0.149/0.160/0.170/0.091 within "
               "+/-0.0005");
    }

    // 3: F-test correctness.
    {
        FTestResult r = anova_oneway({{1, 2, 3}, {4, 5, 6}});
        bool exact = std::fabs(r.f - 13.5) <= 1e-9 && r.df_between == 1 &&
                     r.df_within == 4;

        const ReferenceMatrix& m = reference_times();
        std::vector<double> hash_col, set_col;
        for (const auto& row : m.values_us) {
            hash_col.push_back(row[0]);
            set_col.push_back(row[4]);
        }
        FTestResult hs = anova_oneway({hash_col, set_col});
        bool ok = exact && !hs.significant_at_5pct;
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "F=13.5 df(1,4) exact; hash-vs-set F=%.4f p=%.4f not "
                      "significant at 5%%",
                      hs.f, hs.p_value);
        report(3, ok, buf);
    }

    // 4: hash determinism against the wide-integer oracle.
    {
        bool ok = midsquare_hash({0, 0}, 64) == 0 &&
                  midsquare_trace({0x100, 0x100}, 64).centre == 0x10000;
        std::mt19937_64 rng(404);
        for (int i = 0; i < 10000 && ok; ++i) {
            std::uint32_t a = std::uint32_t(rng());
            std::uint32_t b = std::uint32_t(rng());
            ok = midsquare_hash({a, b}, 64) == wide_oracle_hash(a, b, 64);
        }
        report(4, ok,
               "10000 random word pairs plus fixed vectors match the exact "
               "oracle");
    }

    report(5, mask_ok,
           mask_ok ? "popcount and bit/slot consistency held after every "
                     "operation"
                   : "bitmask invariant violated during criterion 1 scripts");

    // 6: scaling shape via counters.
    {
        auto list_cost = [](int n) {
            LinkedListBackend ll;
            for (int i = 0; i < n; ++i)
                ll.insert("e" + std::to_string(i), "v");
            ll.reset_work();
            ll.lookup("e0"); // oldest entry: deepest in the chain
            return ll.work();
        };
        std::uint64_t small = list_cost(8), big = list_cost(32);
        bool list_ok = big >= 3 * small;

        BitmaskBackend bm(32);
        for (int i = 0; i < 32; ++i)
            bm.insert("e" + std::to_string(i), "v");
        bool bm_ok = true;
        for (int i = 0; i < 32; ++i) {
            bm.reset_work();
            bm.lookup("e" + std::to_string(i));
            bm_ok = bm_ok && bm.work() <= 32;
        }

        SplayBackend tree;
        for (int i = 0; i < 32; ++i)
            tree.insert("e" + std::to_string(i), "v");
        tree.lookup("e5");
        tree.reset_work();
        tree.lookup("e5");
        bool tree_ok = tree.work() == 1;

        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "list lookup comparisons %llu->%llu (>=3x), bitmask "
                      "visits <=32, splay repeat lookup touches %llu node",
                      (unsigned long long)small, (unsigned long long)big,
                      (unsigned long long)tree.work());
        report(6, list_ok && bm_ok && tree_ok, buf);
    }

    // 7 (advisory): overall-average ordering on this hardware.
    {
        std::vector<BackendKind> backends = {
            BackendKind::LinkedList, BackendKind::StaticArray,
            BackendKind::Hash, BackendKind::SplayTree,
            BackendKind::BitmaskSet};
        std::vector<const ScriptSpec*> scripts;
        for (const auto& s : all_scripts()) scripts.push_back(&s);
        BenchConfig config;
        config.seed = 2026;
        config.repetitions = 2000;
        config.warmup = 200;
        BenchReport r = run_bench(backends, scripts, config);
        double list_avg = r.backend_average_ns[0];
        double array_avg = r.backend_average_ns[1];
        double hash_avg = r.backend_average_ns[2];
        double set_avg = r.backend_average_ns[4];
        bool ok = set_avg < array_avg && set_avg < list_avg &&
                  hash_avg < array_avg && hash_avg < list_avg;
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "averages ns: list=%.0f array=%.0f hash=%.0f "
                      "tree=%.0f set=%.0f (expect set,hash below "
                      "array,list)",
                      list_avg, array_avg, hash_avg,
                      r.backend_average_ns[3], set_avg);
        report(7, ok, buf, /*advisory=*/true);
    }

    return failures == 0 ? 0 : 1;
}
