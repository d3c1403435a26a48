#ifndef PROPLIST_STATIC_ARRAY_HPP
#define PROPLIST_STATIC_ARRAY_HPP

#include "proplist/core.hpp"

#include <string>
#include <vector>

namespace proplist {

// Fixed-capacity array of name/value slot pairs with hole marking. Removal
// marks the slot empty and never compacts; searches therefore scan past
// holes until a match or the end of the array. Insert reuses the
// lowest-index empty slot (first fit).
class StaticArrayBackend final : public PropertyList {
    struct Slot {
        bool occupied = false;
        std::string name;
        std::string value;
    };

public:
    explicit StaticArrayBackend(std::size_t capacity = 32)
        : slots_(capacity) {}

    Status insert(std::string_view name, std::string_view value) override {
        if (!valid_name(name)) return PlError::InvalidName;
        std::size_t hole = slots_.size();
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            ++visits_;
            if (slots_[i].occupied) {
                if (slots_[i].name == name) return PlError::DuplicateName;
            } else if (hole == slots_.size()) {
                hole = i;
            }
        }
        if (hole == slots_.size()) return PlError::CapacityExceeded;
        slots_[hole] = {true, std::string(name), std::string(value)};
        ++size_;
        return ok_status();
    }

    Result<std::string> remove(std::string_view name) override {
        if (std::size_t i = find(name); i < slots_.size()) {
            std::string out = std::move(slots_[i].value);
            slots_[i] = {};
            --size_;
            return out;
        }
        return PlError::NotFound;
    }

    Result<std::string> lookup(std::string_view name) override {
        if (std::size_t i = find(name); i < slots_.size())
            return slots_[i].value;
        return PlError::NotFound;
    }

    std::size_t size() const override { return size_; }

    std::uint64_t work() const override { return visits_; }
    void reset_work() override { visits_ = 0; }

    std::size_t capacity() const { return slots_.size(); }
    bool slot_occupied(std::size_t i) const { return slots_[i].occupied; }

private:
    std::size_t find(std::string_view name) {
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            ++visits_;
            if (slots_[i].occupied && slots_[i].name == name) return i;
        }
        return slots_.size();
    }

    std::vector<Slot> slots_;
    std::size_t size_ = 0;
    std::uint64_t visits_ = 0;
};

} // namespace proplist

#endif
