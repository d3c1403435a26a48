#ifndef PROPLIST_TESTS_SUPPORT_HPP
#define PROPLIST_TESTS_SUPPORT_HPP

#include "proplist/core.hpp"
#include "proplist/oracle.hpp"
#include "proplist/script.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace proplist::test {

struct NamedFactory {
    const char* name;
    std::function<std::unique_ptr<PropertyList>()> make;
};

// The five backends plus the oracle, all under the same contract.
inline std::vector<NamedFactory> all_stores() {
    return {
        {"list", [] { return make_backend(BackendKind::LinkedList); }},
        {"array", [] { return make_backend(BackendKind::StaticArray); }},
        {"hash", [] { return make_backend(BackendKind::Hash); }},
        {"tree", [] { return make_backend(BackendKind::SplayTree); }},
        {"set", [] { return make_backend(BackendKind::BitmaskSet); }},
        {"oracle", [] { return std::make_unique<OracleBackend>(); }},
    };
}

// Name pool of `pool_size` distinct short names. Pool size <= 32 keeps the
// fixed-capacity backends below their limits, so the only errors a random
// script can produce are DuplicateName / NotFound.
inline std::vector<std::string> name_pool(std::size_t pool_size) {
    std::vector<std::string> pool;
    for (std::size_t i = 0; i < pool_size; ++i)
        pool.push_back("k" + std::to_string(i));
    return pool;
}

inline std::vector<Op> random_pool_ops(std::mt19937_64& rng,
                                       std::size_t n_ops,
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

inline std::vector<OpResult> run_trace(PropertyList& list,
                                       const std::vector<Op>& ops) {
    std::vector<OpResult> out;
    out.reserve(ops.size());
    for (const Op& op : ops) out.push_back(apply_op(list, op));
    return out;
}

} // namespace proplist::test

#endif
