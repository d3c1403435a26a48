#ifndef PROPLIST_SPLAY_HPP
#define PROPLIST_SPLAY_HPP

#include "proplist/core.hpp"

#include <string>
#include <vector>

namespace proplist {

// Ordered-map backend: a splay tree keyed on the name's lexicographic byte
// order. Every access splays the touched node (or the last node on the
// search path) to the root bottom-up, so repeated accesses to a small
// working set stay near the top.
class SplayBackend final : public PropertyList {
    struct Node {
        std::string name;
        std::string value;
        Node* left = nullptr;
        Node* right = nullptr;
        Node* parent = nullptr;
    };

public:
    SplayBackend() = default;
    ~SplayBackend() override;

    SplayBackend(const SplayBackend&) = delete;
    SplayBackend& operator=(const SplayBackend&) = delete;

    Status insert(std::string_view name, std::string_view value) override;
    Result<std::string> remove(std::string_view name) override;
    Result<std::string> lookup(std::string_view name) override;

    std::size_t size() const override { return size_; }

    // Nodes inspected during search descents.
    std::uint64_t work() const override { return visits_; }
    void reset_work() override { visits_ = 0; }

    const std::string* root_name() const {
        return root_ ? &root_->name : nullptr;
    }
    std::vector<std::string> inorder_names() const;

private:
    // Descends from the root; returns the matching node or null, setting
    // `last` to the final node touched on the path.
    Node* descend(std::string_view name, Node*& last);

    void rotate(Node* x);
    void splay(Node* x);

    Node* root_ = nullptr;
    std::size_t size_ = 0;
    std::uint64_t visits_ = 0;
};

} // namespace proplist

#endif
