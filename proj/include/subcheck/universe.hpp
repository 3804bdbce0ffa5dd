#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subcheck {

// The fixed, ordered set of alternative names. Index order is the order of
// first appearance; the name <-> index mapping is a bijection.
class Universe {
public:
    Universe() = default;

    // Throws std::invalid_argument on empty or duplicate names.
    explicit Universe(std::vector<std::string> names);

    // "a".."z" for m <= 26, then "e26", "e27", ...
    static Universe letters(std::uint32_t m);

    std::uint32_t size() const { return std::uint32_t(names_.size()); }
    const std::string& name(std::uint32_t index) const;
    std::optional<std::uint32_t> index_of(std::string_view name) const;
    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const Universe& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace subcheck
