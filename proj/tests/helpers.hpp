#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/cochain.hpp"
#include "core/group.hpp"

namespace testutil {

// The standard preset census used by the property suites.
inline std::vector<std::pair<std::string, projcoh::FiniteGroup>> preset_census(
    int64_t max_order) {
    static const char* specs[] = {
        "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
        "cyclic:7", "cyclic:8", "cyclic:9", "cyclic:10", "cyclic:11", "cyclic:12",
        "klein4", "dihedral:2", "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6",
        "quaternion8", "symmetric:3", "symmetric:4",
        "product(cyclic:3,cyclic:3)", "product(cyclic:2,cyclic:4)",
        "product(cyclic:2,product(cyclic:2,cyclic:2))", "product(cyclic:2,cyclic:6)",
    };
    std::vector<std::pair<std::string, projcoh::FiniteGroup>> out;
    for (const char* s : specs) {
        projcoh::FiniteGroup g = projcoh::preset_group(s, 0);
        if (g.order() <= max_order) out.emplace_back(s, g);
    }
    return out;
}

// The Klein-four standard nontrivial cocycle w((a,b),(c,d)) = b*c mod 2,
// with elements indexed as (a,b) -> 2a + b.
inline projcoh::Cochain2 klein_nontrivial_cocycle() {
    projcoh::Cochain2 w = projcoh::Cochain2::zero(4, 2);
    for (int64_t x = 0; x < 4; ++x)
        for (int64_t y = 0; y < 4; ++y) w.at(x, y) = ((x % 2) * (y / 2)) % 2;
    return w;
}

} // namespace testutil
