#ifndef PROPLIST_ORACLE_HPP
#define PROPLIST_ORACLE_HPP

#include "proplist/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace proplist {

// Reference implementation of the contract as a plain association sequence
// with exhaustive scans. Ground truth for the differential tests; allowed
// to be slow.
class OracleBackend final : public PropertyList {
public:
    Status insert(std::string_view name, std::string_view value) override {
        if (!valid_name(name)) return PlError::InvalidName;
        for (const auto& [n, v] : entries_)
            if (n == name) return PlError::DuplicateName;
        entries_.emplace_back(std::string(name), std::string(value));
        return ok_status();
    }

    Result<std::string> remove(std::string_view name) override {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].first == name) {
                std::string out = std::move(entries_[i].second);
                entries_.erase(entries_.begin() + std::ptrdiff_t(i));
                return out;
            }
        }
        return PlError::NotFound;
    }

    Result<std::string> lookup(std::string_view name) override {
        for (const auto& [n, v] : entries_)
            if (n == name) return v;
        return PlError::NotFound;
    }

    std::size_t size() const override { return entries_.size(); }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

} // namespace proplist

#endif
