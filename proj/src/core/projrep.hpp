#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/cochain.hpp"
#include "core/group.hpp"
#include "core/monomial.hpp"

namespace projcoh {

// One monomial operator per group element plus the cocycle the family is
// claimed to satisfy: ops[g] ops[h] = xi^claimed(g,h) ops[gh].
struct ProjectiveRep {
    int64_t group_order = 0;
    int64_t dimension = 0;
    int64_t phase_modulus = 1;
    std::vector<MonomialOperator> ops;
    Cochain2 claimed_cocycle;

    const MonomialOperator& op(int64_t g) const { return ops[static_cast<size_t>(g)]; }
    bool operator==(const ProjectiveRep&) const = default;
};

struct RelationReport {
    bool ok = true;
    int64_t pairs_checked = 0;
    std::optional<std::pair<int64_t, int64_t>> first_failure;
};

// Exhaustive check of the defining relation against the claimed cocycle.
RelationReport verify_relations(const FiniteGroup& g, const ProjectiveRep& r);

// Structural validity: operator shapes, identity at index 0, cocycle shape.
void check_rep(const FiniteGroup& g, const ProjectiveRep& r);

// The omega-regular representation on the group's coordinate space:
// basis delta_h maps under ops[g] to xi^w(g,h) delta_(g h).
ProjectiveRep regular_rep(const FiniteGroup& g, const Cochain2& w);

// Optional construction diagnostics for the finite-dimensional eigenspace
// construction: sizes of all n eigenspaces of Ad(U) on the full tensor
// space and whether every pi(g) commutes with Ad(U).
struct LemmaDiagnostics {
    int64_t full_dimension = 0;
    std::vector<int64_t> eigenspace_sizes;
    bool commutes_with_adu = false;
};

// Monomial realization of the eigenspace construction: from a normalized
// cocycle lam with values mod n it produces a representation of dimension
// n^(2|G|-1) with claimed cocycle lam. n = 1 yields the one-dimensional
// trivial representation. dim_cap guards the output dimension.
ProjectiveRep lemma_rep(const FiniteGroup& g, const Cochain2& lam,
                        int64_t dim_cap = 1 << 20, LemmaDiagnostics* diag = nullptr);

// Raised by extract_cocycle when some pair's defect operator is not scalar.
class nonscalar_defect_error : public domain_error {
public:
    nonscalar_defect_error(int64_t g, int64_t h, MonomialOperator defect);
    int64_t g, h;
    MonomialOperator defect;
};

// lambda(g,h) from ops[g] ops[h] ops[gh]^-1; requires every defect to be
// scalar and the resulting table to be a cocycle.
Cochain2 extract_cocycle(const FiniteGroup& g, const ProjectiveRep& r);

// ops'[g] = xi^(-f(g)) ops[g]; requires d1 f = claimed cocycle (moduli are
// unified by lcm first). The result is a genuine representation.
ProjectiveRep lift_rep(const FiniteGroup& g, const ProjectiveRep& r, const Cochain1& f);

} // namespace projcoh
