#include "subcheck/sensitivity.hpp"

#include <stdexcept>

#include "subcheck/choice.hpp"

namespace subcheck {

SensMatrix build_sensitivity(const PreferenceList& list) {
    if (check_coherence(list))
        throw std::invalid_argument("build_sensitivity: list is not coherent");

    const auto& members = list.members();
    SensMatrix sens(members.size(), list.universe_size());

    // Ordered pairs X > Y. X fits inside Y u {x} for an x outside Y exactly
    // when X - Y = {x}; X inside Y itself cannot happen on a coherent list.
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (auto x = (members[i] - members[j]).sole_element())
                sens.mark_sensitive(*x, j);
        }
    }
    return sens;
}

}  // namespace subcheck
