#ifndef PROPLIST_SCRIPT_HPP
#define PROPLIST_SCRIPT_HPP

#include "proplist/core.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace proplist {

enum class OpKind : std::uint8_t { Insert, Remove, Lookup };

struct Op {
    OpKind kind;
    std::string name;
    std::string value; // inserts only
    friend bool operator==(const Op&, const Op&) = default;
};

// Result of applying one operation: unit for a successful insert, the
// value for a successful remove/lookup, or the error kind. Comparable, so
// whole traces can be checked element-wise against the oracle.
using OpResult = std::variant<std::monostate, std::string, PlError>;

OpResult apply_op(PropertyList& list, const Op& op);
std::string format_result(const OpResult& r);

// The 15 three-operation scripts, named by their mnemonics (I = insert,
// D = delete, L = lookup).
struct ScriptSpec {
    const char* mnemonic;
    std::array<OpKind, 3> ops;
};

const std::array<ScriptSpec, 15>& all_scripts();
const ScriptSpec* find_script(std::string_view mnemonic);

struct WorkloadConfig {
    int preload_min = 25;
    int preload_max = 29;
    int name_len_max = int(kMaxNameLen);
};

// A concrete workload: the untimed preload inserts plus the three scripted
// operations with chosen names and values. Deterministic for a given
// (seed, script, config). Delete and lookup targets are drawn uniformly
// from the live names at that point in the sequence, so every scripted
// operation succeeds; insert names are fresh.
struct Workload {
    std::vector<Op> preload;
    std::array<Op, 3> script;
};

Workload generate_workload(std::uint64_t seed, const ScriptSpec& script,
                           const WorkloadConfig& config = {});

} // namespace proplist

#endif
