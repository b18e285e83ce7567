#pragma once

#include "spinsh/catalog/helpers.hpp"
#include "spinsh/catalog/reg_appendix.hpp"
#include "spinsh/catalog/reg_local.hpp"
#include "spinsh/catalog/reg_scalar.hpp"
#include "spinsh/catalog/reg_scaten.hpp"
#include "spinsh/catalog/reg_spin.hpp"
#include "spinsh/catalog/types.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace spinsh::catalog {

inline const std::vector<TheoremSpec>& registry() {
    static const std::vector<TheoremSpec> specs = [] {
        std::vector<TheoremSpec> v;
        detail::add_scalar(v);
        detail::add_scaten(v);
        detail::add_local(v);
        detail::add_spin(v);
        detail::add_appendix(v);
        return v;
    }();
    return specs;
}

inline const TheoremSpec& find_theorem(const std::string& id) {
    for (const auto& s : registry())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown theorem id: " + id);
}

} // namespace spinsh::catalog
