#include "subcheck/universe.hpp"

#include <stdexcept>

namespace subcheck {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
        const std::string& name = names_[i];
        if (name.empty()) throw std::invalid_argument("alternative names must be non-empty");
        if (!index_.emplace(name, i).second)
            throw std::invalid_argument("duplicate alternative name: " + name);
    }
}

Universe Universe::letters(std::uint32_t m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (i < 26)
            names.push_back(std::string(1, char('a' + i)));
        else
            names.push_back("e" + std::to_string(i));
    }
    return Universe(std::move(names));
}

const std::string& Universe::name(std::uint32_t index) const {
    if (index >= names_.size()) throw std::out_of_range("Universe::name: index out of range");
    return names_[index];
}

std::optional<std::uint32_t> Universe::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace subcheck
