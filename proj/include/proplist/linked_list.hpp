#ifndef PROPLIST_LINKED_LIST_HPP
#define PROPLIST_LINKED_LIST_HPP

#include "proplist/core.hpp"

#include <cassert>
#include <string>

namespace proplist {

// Singly linked chain of alternating name and value cells. Odd positions
// (1st, 3rd, ...) hold names, even positions hold values. New pairs are
// prepended, so insert is a link splice after the duplicate-check scan.
class LinkedListBackend final : public PropertyList {
    struct Cell {
        std::string bytes;
        Cell* next = nullptr;
    };

public:
    LinkedListBackend() = default;
    ~LinkedListBackend() override { clear(); }

    LinkedListBackend(const LinkedListBackend&) = delete;
    LinkedListBackend& operator=(const LinkedListBackend&) = delete;

    LinkedListBackend(LinkedListBackend&& o) noexcept
        : head_(o.head_), size_(o.size_), comparisons_(o.comparisons_) {
        o.head_ = nullptr;
        o.size_ = 0;
    }

    Status insert(std::string_view name, std::string_view value) override {
        if (!valid_name(name)) return PlError::InvalidName;
        if (find_name_cell(name)) return PlError::DuplicateName;
        Cell* v = new Cell{std::string(value), head_};
        Cell* n = new Cell{std::string(name), v};
        head_ = n;
        ++size_;
        return ok_status();
    }

    Result<std::string> remove(std::string_view name) override {
        Cell** link = &head_;
        while (*link) {
            Cell* n = *link;
            ++comparisons_;
            if (n->bytes == name) {
                Cell* v = n->next;
                *link = v->next;
                std::string out = std::move(v->bytes);
                delete n;
                delete v;
                --size_;
                return out;
            }
            link = &n->next->next;
        }
        return PlError::NotFound;
    }

    Result<std::string> lookup(std::string_view name) override {
        if (Cell* n = find_name_cell(name)) return n->next->bytes;
        return PlError::NotFound;
    }

    std::size_t size() const override { return size_; }

    std::uint64_t work() const override { return comparisons_; }
    void reset_work() override { comparisons_ = 0; }

    // Debug accessors for the shape invariant: cell count (always even) and
    // the payload of the i-th cell.
    std::size_t chain_length() const {
        std::size_t n = 0;
        for (Cell* c = head_; c; c = c->next) ++n;
        return n;
    }
    const std::string& cell_at(std::size_t i) const {
        Cell* c = head_;
        while (i--) c = c->next;
        assert(c);
        return c->bytes;
    }

private:
    Cell* find_name_cell(std::string_view name) {
        for (Cell* c = head_; c; c = c->next->next) {
            ++comparisons_;
            if (c->bytes == name) return c;
        }
        return nullptr;
    }

    void clear() {
        while (head_) {
            Cell* c = head_;
            head_ = c->next;
            delete c;
        }
    }

    Cell* head_ = nullptr;
    std::size_t size_ = 0;
    std::uint64_t comparisons_ = 0;
};

} // namespace proplist

#endif
