#ifndef PROPLIST_HASH_HPP
#define PROPLIST_HASH_HPP

#include "proplist/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace proplist {

// Two 32-bit words derived from a name: the name's bytes are split into
// consecutive 4-byte little-endian chunks (last chunk zero-padded);
// even-indexed chunks XOR into a, odd-indexed into b.
struct WordPair {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    friend bool operator==(const WordPair&, const WordPair&) = default;
};

WordPair pack_name(std::string_view name);

// Mid-square hash: c = a*b (64-bit product), d = sum of the two 32-bit
// halves of c (mod 2^32), e = d*d (64-bit), then the centre 32 bits of e
// (bits 16..47) reduced mod the table size. All intermediates exposed for
// the CLI's audit output.
struct MidSquareTrace {
    std::uint32_t a, b;
    std::uint64_t product;   // c
    std::uint32_t folded;    // d
    std::uint64_t square;    // e
    std::uint32_t centre;    // bits 16..47 of e
    std::uint32_t index;     // centre mod M
};

MidSquareTrace midsquare_trace(WordPair w, std::size_t table_size);

inline std::uint32_t midsquare_hash(WordPair w, std::size_t table_size) {
    return midsquare_trace(w, table_size).index;
}

// Open-addressed hash table keyed by the mid-square hash. Collisions are
// resolved by sequential scan (linear probing with wrap-around) over at
// most probe_limit slots, then by bucketing: an overflow chain attached to
// the home bucket. Removal leaves a tombstone so later probes continue
// past it.
class HashBackend final : public PropertyList {
    enum class SlotState : std::uint8_t { Empty, Occupied, Tombstone };

    struct Bucket {
        SlotState state = SlotState::Empty;
        std::string name;
        std::string value;
        std::vector<std::pair<std::string, std::string>> overflow;
    };

public:
    explicit HashBackend(std::size_t table_size = 64,
                         std::size_t probe_limit = 8);

    Status insert(std::string_view name, std::string_view value) override;
    Result<std::string> remove(std::string_view name) override;
    Result<std::string> lookup(std::string_view name) override;

    std::size_t size() const override { return size_; }

    std::uint64_t work() const override { return probes_ + overflow_visits_; }
    void reset_work() override { probes_ = overflow_visits_ = 0; }

    std::uint64_t probes() const { return probes_; }
    std::uint64_t overflow_visits() const { return overflow_visits_; }

    std::size_t table_size() const { return buckets_.size(); }
    std::size_t overflow_chain_length(std::size_t home) const {
        return buckets_[home].overflow.size();
    }

private:
    std::size_t home_of(std::string_view name) const {
        return midsquare_hash(pack_name(name), buckets_.size());
    }

    // Probe path hit: bucket index. Overflow hit: chain position, flagged.
    struct Hit {
        bool found = false;
        bool in_overflow = false;
        std::size_t slot = 0; // bucket index or chain position
    };
    Hit find(std::size_t home, std::string_view name);

    std::vector<Bucket> buckets_;
    std::size_t probe_limit_;
    std::size_t size_ = 0;
    std::uint64_t probes_ = 0;
    std::uint64_t overflow_visits_ = 0;
};

} // namespace proplist

#endif
