#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/error.hpp"

namespace projcoh {

// Basis vector e_i maps to xi^phase[i] * e_perm[i] with xi = exp(2*pi*i/m).
// Exact by construction: phases are exponents, never floats.
struct MonomialOperator {
    int64_t dimension = 0;
    int64_t phase_modulus = 1;
    std::vector<uint32_t> perm;
    std::vector<int64_t> phase;

    static MonomialOperator identity(int64_t dim, int64_t modulus);
    bool operator==(const MonomialOperator&) const = default;
};

// Bijectivity of perm plus reduced phases.
void check_operator(const MonomialOperator& op);

// (S o T): e_i -> xi^(T.phase[i] + S.phase[T.perm[i]]) e_(S.perm[T.perm[i]]).
MonomialOperator compose(const MonomialOperator& s, const MonomialOperator& t);

MonomialOperator inverse(const MonomialOperator& t);

// Multiplies by the global phase xi^k.
MonomialOperator scale_phase(const MonomialOperator& t, int64_t k);

// Phase exponent when the operator is scalar (identity permutation with a
// constant phase), nullopt otherwise.
std::optional<int64_t> scalar_phase(const MonomialOperator& t);

// Re-encodes phases into a larger modulus (must be a multiple).
MonomialOperator embed_phase_modulus(const MonomialOperator& t, int64_t new_modulus);

} // namespace projcoh
