#include "proplist/splay.hpp"

namespace proplist {

SplayBackend::~SplayBackend() {
    // Iterative teardown; recursion could overflow on degenerate chains.
    Node* cur = root_;
    while (cur) {
        if (cur->left) {
            cur = cur->left;
        } else if (cur->right) {
            cur = cur->right;
        } else {
            Node* p = cur->parent;
            if (p) (p->left == cur ? p->left : p->right) = nullptr;
            delete cur;
            cur = p;
        }
    }
}

SplayBackend::Node* SplayBackend::descend(std::string_view name, Node*& last) {
    last = nullptr;
    Node* cur = root_;
    while (cur) {
        ++visits_;
        last = cur;
        int c = name.compare(cur->name);
        if (c == 0) return cur;
        cur = c < 0 ? cur->left : cur->right;
    }
    return nullptr;
}

void SplayBackend::rotate(Node* x) {
    Node* p = x->parent;
    Node* g = p->parent;
    if (p->left == x) {
        p->left = x->right;
        if (x->right) x->right->parent = p;
        x->right = p;
    } else {
        p->right = x->left;
        if (x->left) x->left->parent = p;
        x->left = p;
    }
    p->parent = x;
    x->parent = g;
    if (g) {
        (g->left == p ? g->left : g->right) = x;
    } else {
        root_ = x;
    }
}

void SplayBackend::splay(Node* x) {
    while (x->parent) {
        Node* p = x->parent;
        Node* g = p->parent;
        if (!g) {
            rotate(x); // zig
        } else if ((g->left == p) == (p->left == x)) {
            rotate(p); // zig-zig
            rotate(x);
        } else {
            rotate(x); // zig-zag
            rotate(x);
        }
    }
}

Status SplayBackend::insert(std::string_view name, std::string_view value) {
    if (!valid_name(name)) return PlError::InvalidName;
    Node* last = nullptr;
    if (descend(name, last)) {
        splay(last);
        return PlError::DuplicateName;
    }
    Node* n = new Node{std::string(name), std::string(value)};
    n->parent = last;
    if (!last) {
        root_ = n;
    } else if (name < last->name) {
        last->left = n;
    } else {
        last->right = n;
    }
    splay(n);
    ++size_;
    return ok_status();
}

Result<std::string> SplayBackend::remove(std::string_view name) {
    Node* last = nullptr;
    Node* n = descend(name, last);
    if (!n) {
        if (last) splay(last);
        return PlError::NotFound;
    }
    splay(n);
    std::string out = std::move(n->value);

    Node* left = n->left;
    Node* right = n->right;
    if (left) left->parent = nullptr;
    if (right) right->parent = nullptr;
    delete n;
    --size_;

    if (!left) {
        root_ = right;
    } else {
        // Join: splay the maximum of the left subtree, then hang the right
        // subtree off it.
        root_ = left;
        Node* max = left;
        while (max->right) {
            ++visits_;
            max = max->right;
        }
        splay(max);
        max->right = right;
        if (right) right->parent = max;
    }
    return out;
}

Result<std::string> SplayBackend::lookup(std::string_view name) {
    Node* last = nullptr;
    Node* n = descend(name, last);
    if (last) splay(last);
    if (!n) return PlError::NotFound;
    return n->value;
}

std::vector<std::string> SplayBackend::inorder_names() const {
    std::vector<std::string> out;
    out.reserve(size_);
    std::vector<const Node*> stack;
    const Node* cur = root_;
    while (cur || !stack.empty()) {
        while (cur) {
            stack.push_back(cur);
            cur = cur->left;
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(cur->name);
        cur = cur->right;
    }
    return out;
}

} // namespace proplist
