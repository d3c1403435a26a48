#include "proplist/bitmask.hpp"
#include "proplist/core.hpp"
#include "proplist/hash.hpp"
#include "proplist/linked_list.hpp"
#include "proplist/splay.hpp"
#include "proplist/static_array.hpp"

namespace proplist {

std::unique_ptr<PropertyList> make_backend(BackendKind kind,
                                           const BackendOptions& opts) {
    switch (kind) {
    case BackendKind::LinkedList:
        return std::make_unique<LinkedListBackend>();
    case BackendKind::StaticArray:
        return std::make_unique<StaticArrayBackend>(opts.array_capacity);
    case BackendKind::Hash:
        return std::make_unique<HashBackend>(opts.hash_table_size,
                                             opts.hash_probe_limit);
    case BackendKind::SplayTree:
        return std::make_unique<SplayBackend>();
    case BackendKind::BitmaskSet:
        return std::make_unique<BitmaskBackend>(opts.word_width);
    }
    return nullptr;
}

} // namespace proplist
