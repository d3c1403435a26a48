#include "proplist/hash.hpp"

#include <cassert>
#include <stdexcept>

namespace proplist {

WordPair pack_name(std::string_view name) {
    WordPair w;
    std::size_t chunk = 0;
    for (std::size_t off = 0; off < name.size(); off += 4, ++chunk) {
        std::uint32_t word = 0;
        for (std::size_t j = 0; j < 4 && off + j < name.size(); ++j)
            word |= std::uint32_t(static_cast<unsigned char>(name[off + j]))
                    << (8 * j);
        if (chunk % 2 == 0)
            w.a ^= word;
        else
            w.b ^= word;
    }
    return w;
}

MidSquareTrace midsquare_trace(WordPair w, std::size_t table_size) {
    assert(table_size > 0 && (table_size & (table_size - 1)) == 0);
    MidSquareTrace t;
    t.a = w.a;
    t.b = w.b;
    t.product = std::uint64_t(w.a) * std::uint64_t(w.b);
    t.folded = std::uint32_t(t.product >> 32) + std::uint32_t(t.product);
    t.square = std::uint64_t(t.folded) * std::uint64_t(t.folded);
    t.centre = std::uint32_t(t.square >> 16);
    t.index = t.centre % std::uint32_t(table_size);
    return t;
}

HashBackend::HashBackend(std::size_t table_size, std::size_t probe_limit)
    : buckets_(table_size), probe_limit_(probe_limit) {
    if (table_size == 0 || (table_size & (table_size - 1)) != 0)
        throw std::invalid_argument("hash table size must be a power of two");
    if (probe_limit == 0)
        throw std::invalid_argument("probe limit must be >= 1");
}

HashBackend::Hit HashBackend::find(std::size_t home, std::string_view name) {
    bool saw_empty = false;
    for (std::size_t i = 0; i < probe_limit_; ++i) {
        std::size_t idx = (home + i) % buckets_.size();
        ++probes_;
        const Bucket& b = buckets_[idx];
        if (b.state == SlotState::Occupied && b.name == name)
            return {true, false, idx};
        if (b.state == SlotState::Empty) {
            // A never-occupied slot ends the probe path; slots only go
            // Empty -> Occupied -> Tombstone, so nothing was probed past it.
            saw_empty = true;
            break;
        }
    }
    if (!saw_empty) {
        const auto& chain = buckets_[home].overflow;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            ++overflow_visits_;
            if (chain[i].first == name) return {true, true, i};
        }
    }
    return {};
}

Status HashBackend::insert(std::string_view name, std::string_view value) {
    if (!valid_name(name)) return PlError::InvalidName;
    std::size_t home = home_of(name);
    if (find(home, name).found) return PlError::DuplicateName;

    for (std::size_t i = 0; i < probe_limit_; ++i) {
        std::size_t idx = (home + i) % buckets_.size();
        ++probes_;
        Bucket& b = buckets_[idx];
        if (b.state != SlotState::Occupied) {
            b.state = SlotState::Occupied;
            b.name = name;
            b.value = value;
            ++size_;
            return ok_status();
        }
    }
    buckets_[home].overflow.emplace_back(std::string(name),
                                         std::string(value));
    ++size_;
    return ok_status();
}

Result<std::string> HashBackend::remove(std::string_view name) {
    std::size_t home = home_of(name);
    Hit h = find(home, name);
    if (!h.found) return PlError::NotFound;
    --size_;
    if (h.in_overflow) {
        auto& chain = buckets_[home].overflow;
        std::string out = std::move(chain[h.slot].second);
        chain.erase(chain.begin() + std::ptrdiff_t(h.slot));
        return out;
    }
    Bucket& b = buckets_[h.slot];
    std::string out = std::move(b.value);
    b.state = SlotState::Tombstone;
    b.name.clear();
    b.value.clear();
    return out;
}

Result<std::string> HashBackend::lookup(std::string_view name) {
    std::size_t home = home_of(name);
    Hit h = find(home, name);
    if (!h.found) return PlError::NotFound;
    if (h.in_overflow) return buckets_[home].overflow[h.slot].second;
    return buckets_[h.slot].value;
}

} // namespace proplist
