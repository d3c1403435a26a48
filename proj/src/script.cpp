#include "proplist/script.hpp"

#include <algorithm>
#include <random>

namespace proplist {

const char* to_string(PlError e) {
    switch (e) {
    case PlError::DuplicateName: return "DuplicateName";
    case PlError::NotFound: return "NotFound";
    case PlError::CapacityExceeded: return "CapacityExceeded";
    case PlError::InvalidName: return "InvalidName";
    }
    return "?";
}

const char* to_string(BackendKind k) {
    switch (k) {
    case BackendKind::LinkedList: return "list";
    case BackendKind::StaticArray: return "array";
    case BackendKind::Hash: return "hash";
    case BackendKind::SplayTree: return "tree";
    case BackendKind::BitmaskSet: return "set";
    }
    return "?";
}

OpResult apply_op(PropertyList& list, const Op& op) {
    switch (op.kind) {
    case OpKind::Insert: {
        Status s = list.insert(op.name, op.value);
        if (s.ok()) return std::monostate{};
        return s.error();
    }
    case OpKind::Remove: {
        auto r = list.remove(op.name);
        if (r.ok()) return r.value();
        return r.error();
    }
    case OpKind::Lookup: {
        auto r = list.lookup(op.name);
        if (r.ok()) return r.value();
        return r.error();
    }
    }
    return PlError::NotFound;
}

std::string format_result(const OpResult& r) {
    if (std::holds_alternative<std::monostate>(r)) return "ok";
    if (const auto* v = std::get_if<std::string>(&r)) return "\"" + *v + "\"";
    return to_string(std::get<PlError>(r));
}

const std::array<ScriptSpec, 15>& all_scripts() {
    using enum OpKind;
    static const std::array<ScriptSpec, 15> scripts = {{
        {"ILD", {Insert, Lookup, Remove}},
        {"IDL", {Insert, Remove, Lookup}},
        {"LID", {Lookup, Insert, Remove}},
        {"LDI", {Lookup, Remove, Insert}},
        {"DIL", {Remove, Insert, Lookup}},
        {"DLI", {Remove, Lookup, Insert}},
        {"III", {Insert, Insert, Insert}},
        {"IIL", {Insert, Insert, Lookup}},
        {"IID", {Insert, Insert, Remove}},
        {"DDD", {Remove, Remove, Remove}},
        {"DDI", {Remove, Remove, Insert}},
        {"DDL", {Remove, Remove, Lookup}},
        {"LLL", {Lookup, Lookup, Lookup}},
        {"LLD", {Lookup, Lookup, Remove}},
        {"LLI", {Lookup, Lookup, Insert}},
    }};
    return scripts;
}

const ScriptSpec* find_script(std::string_view mnemonic) {
    for (const auto& s : all_scripts())
        if (mnemonic == s.mnemonic) return &s;
    return nullptr;
}

namespace {

constexpr char kNameChars[] =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

std::string random_name(std::mt19937_64& rng, int len_max) {
    std::uniform_int_distribution<int> len_dist(1, len_max);
    std::uniform_int_distribution<int> ch_dist(0, int(sizeof(kNameChars)) - 2);
    int len = len_dist(rng);
    std::string s(std::size_t(len), '\0');
    for (auto& c : s) c = kNameChars[ch_dist(rng)];
    return s;
}

std::string fresh_name(std::mt19937_64& rng, int len_max,
                       const std::vector<std::string>& live) {
    for (;;) {
        std::string s = random_name(rng, len_max);
        if (std::find(live.begin(), live.end(), s) == live.end()) return s;
    }
}

} // namespace

Workload generate_workload(std::uint64_t seed, const ScriptSpec& script,
                           const WorkloadConfig& config) {
    std::mt19937_64 rng(seed);
    Workload w;

    std::uniform_int_distribution<int> preload_dist(config.preload_min,
                                                    config.preload_max);
    int preload = preload_dist(rng);

    std::vector<std::string> live;
    live.reserve(std::size_t(preload) + 3);
    for (int i = 0; i < preload; ++i) {
        std::string name = fresh_name(rng, config.name_len_max, live);
        std::string value = random_name(rng, config.name_len_max);
        live.push_back(name);
        w.preload.push_back({OpKind::Insert, std::move(name),
                             std::move(value)});
    }

    for (std::size_t i = 0; i < 3; ++i) {
        OpKind kind = script.ops[i];
        Op op{kind, {}, {}};
        switch (kind) {
        case OpKind::Insert:
            op.name = fresh_name(rng, config.name_len_max, live);
            op.value = random_name(rng, config.name_len_max);
            live.push_back(op.name);
            break;
        case OpKind::Remove:
        case OpKind::Lookup: {
            // Targets track the live set through the script itself, so a
            // delete never re-targets an already-deleted name and every
            // scripted op succeeds.
            std::uniform_int_distribution<std::size_t> pick(0,
                                                            live.size() - 1);
            op.name = live[pick(rng)];
            if (kind == OpKind::Remove)
                live.erase(std::find(live.begin(), live.end(), op.name));
            break;
        }
        }
        w.script[i] = std::move(op);
    }
    return w;
}

} // namespace proplist
