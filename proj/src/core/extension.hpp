#pragma once

#include <string>
#include <vector>

#include "core/cochain.hpp"
#include "core/group.hpp"
#include "core/projrep.hpp"

namespace projcoh {

// Central extension realizing a cocycle: pairs (g, t) with t in Z_m' where
// m' is the order of the subgroup generated by the cocycle's values, indexed
// lexicographically as g * m' + t.
struct CentralExtension {
    FiniteGroup base;
    int64_t fiber_order = 1;
    FiniteGroup total;
    GroupHom inject;  // cyclic(m') -> total
    GroupHom project; // total -> base
    Cochain2 reduced_cocycle; // values rescaled into Z_m'
};

CentralExtension build_central_extension(const FiniteGroup& g, const Cochain2& w);

struct ExtensionCheck {
    std::string name;
    bool ok = false;
    std::string witness; // empty when ok
};

struct ExtensionReport {
    std::vector<ExtensionCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// Verifies every CentralExtension invariant; failures become report entries
// with witnesses, never exceptions.
ExtensionReport verify_extension(const CentralExtension& e);

// The induced family (g,t) -> xi^t ops[g] on a projective representation of
// the base with the matching cocycle; genuine representation of the total
// group. Throws if the family fails multiplicativity.
ProjectiveRep induced_total_rep(const CentralExtension& e, const ProjectiveRep& base_rep);

} // namespace projcoh
