#ifndef PROPLIST_CORE_HPP
#define PROPLIST_CORE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace proplist {

// Property names are raw byte strings, 1..32 bytes, compared by exact byte
// equality (lexicographic byte order where an ordering is needed).
// Values are opaque byte strings of any length.
inline constexpr std::size_t kMaxNameLen = 32;

inline bool valid_name(std::string_view name) {
    return !name.empty() && name.size() <= kMaxNameLen;
}

enum class PlError : std::uint8_t {
    DuplicateName,
    NotFound,
    CapacityExceeded,
    InvalidName,
};

const char* to_string(PlError e);

// Result of a fallible operation: either a value or an error kind.
template <class T>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(PlError e) : v_(e) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const { return std::get<T>(v_); }
    T& value() { return std::get<T>(v_); }
    PlError error() const { return std::get<PlError>(v_); }

    friend bool operator==(const Result& a, const Result& b) = default;

private:
    std::variant<T, PlError> v_;
};

using Status = Result<std::monostate>;
inline Status ok_status() { return Status(std::monostate{}); }

enum class BackendKind : std::uint8_t {
    LinkedList,
    StaticArray,
    Hash,
    SplayTree,
    BitmaskSet,
};

const char* to_string(BackendKind k);

// The backend contract. Every backend provides these four operations with
// identical observable semantics; backends differ only in performance and
// capacity. Backends are single-threaded value objects: no internal
// synchronization, safe to move between threads when not shared.
class PropertyList {
public:
    virtual ~PropertyList() = default;

    // Fails with DuplicateName if name is already present, InvalidName if
    // the length constraint is violated, CapacityExceeded on fixed-capacity
    // backends when full.
    virtual Status insert(std::string_view name, std::string_view value) = 0;

    // Returns the value formerly bound to name; NotFound if absent.
    virtual Result<std::string> remove(std::string_view name) = 0;

    // Returns the bound value without modifying observable contents. The
    // splay backend restructures internally; observable state is unchanged.
    virtual Result<std::string> lookup(std::string_view name) = 0;

    virtual std::size_t size() const = 0;

    // Cumulative instrumentation counter in backend-specific units
    // (comparisons, slot visits, probes, nodes touched). For scaling-shape
    // tests; counters, not clocks.
    virtual std::uint64_t work() const { return 0; }
    virtual void reset_work() {}
};

struct BackendOptions {
    std::size_t array_capacity = 32;  // static array, pairs
    std::size_t hash_table_size = 64; // power of two
    std::size_t hash_probe_limit = 8; // probes before bucketing
    unsigned word_width = 32;         // bitmask set, 32 or 64
};

std::unique_ptr<PropertyList> make_backend(BackendKind kind,
                                           const BackendOptions& opts = {});

} // namespace proplist

#endif
