#ifndef PROPLIST_BITMASK_HPP
#define PROPLIST_BITMASK_HPP

#include "proplist/core.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace proplist {

// Fixed-capacity set backend: one membership word (bit i set when slot i is
// occupied), a slot table of values, and a name table with one slot per
// bit. Insert ORs the slot's one-hot bit string into the membership word;
// remove ANDs its complement. The slot chosen for a new entry is always the
// lowest zero bit of the membership word. Name resolution scans at most W
// fixed slots with no link traversal, so every operation is bounded by the
// word width.
class BitmaskBackend final : public PropertyList {
public:
    explicit BitmaskBackend(unsigned word_width = 32)
        : width_(word_width), names_(word_width), values_(word_width) {
        if (word_width != 32 && word_width != 64)
            throw std::invalid_argument("word width must be 32 or 64");
    }

    Status insert(std::string_view name, std::string_view value) override {
        if (!valid_name(name)) return PlError::InvalidName;
        if (find_slot(name) >= 0) return PlError::DuplicateName;
        unsigned slot = unsigned(std::countr_one(contents_));
        if (slot >= width_) return PlError::CapacityExceeded;
        names_[slot] = name;
        values_[slot] = value;
        contents_ |= bit_string(slot);
        ++size_;
        return ok_status();
    }

    Result<std::string> remove(std::string_view name) override {
        int slot = find_slot(name);
        if (slot < 0) return PlError::NotFound;
        std::string out = std::move(values_[slot]);
        contents_ &= ~bit_string(unsigned(slot));
        names_[slot].clear();
        values_[slot].clear();
        --size_;
        return out;
    }

    Result<std::string> lookup(std::string_view name) override {
        int slot = find_slot(name);
        if (slot < 0) return PlError::NotFound;
        return values_[slot];
    }

    std::size_t size() const override { return size_; }

    std::uint64_t work() const override { return slot_visits_; }
    void reset_work() override { slot_visits_ = 0; }

    // Debug accessors for the invariant suite.
    std::uint64_t set_contents() const { return contents_; }
    unsigned word_width() const { return width_; }
    bool slot_occupied(unsigned i) const {
        return (contents_ >> i) & 1u;
    }
    const std::string& slot_name(unsigned i) const { return names_[i]; }

    static std::uint64_t bit_string(unsigned slot) {
        return std::uint64_t(1) << slot;
    }

private:
    // Index of the slot holding `name`, or -1. A slot participates only
    // when its bit string AND the membership word is nonzero.
    int find_slot(std::string_view name) {
        for (unsigned i = 0; i < width_; ++i) {
            ++slot_visits_;
            if ((contents_ & bit_string(i)) && names_[i] == name)
                return int(i);
        }
        return -1;
    }

    unsigned width_;
    std::uint64_t contents_ = 0;
    std::vector<std::string> names_;
    std::vector<std::string> values_;
    std::size_t size_ = 0;
    std::uint64_t slot_visits_ = 0;
};

} // namespace proplist

#endif
