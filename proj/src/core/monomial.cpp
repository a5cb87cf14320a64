#include "core/monomial.hpp"

#include "core/smith.hpp"

namespace projcoh {

MonomialOperator MonomialOperator::identity(int64_t dim, int64_t modulus) {
    MonomialOperator op;
    op.dimension = dim;
    op.phase_modulus = modulus;
    op.perm.resize(static_cast<size_t>(dim));
    op.phase.assign(static_cast<size_t>(dim), 0);
    for (int64_t i = 0; i < dim; ++i) op.perm[static_cast<size_t>(i)] = static_cast<uint32_t>(i);
    return op;
}

void check_operator(const MonomialOperator& op) {
    if (op.dimension < 1) throw domain_error("operator dimension must be positive");
    if (op.phase_modulus < 1) throw domain_error("phase modulus must be positive");
    if (static_cast<int64_t>(op.perm.size()) != op.dimension ||
        static_cast<int64_t>(op.phase.size()) != op.dimension)
        throw domain_error("operator arrays have the wrong length");
    std::vector<bool> seen(static_cast<size_t>(op.dimension), false);
    for (uint32_t p : op.perm) {
        if (p >= op.dimension || seen[p])
            throw domain_error("operator permutation is not a bijection");
        seen[p] = true;
    }
    for (int64_t ph : op.phase)
        if (ph < 0 || ph >= op.phase_modulus)
            throw domain_error("operator phase not reduced mod " +
                               std::to_string(op.phase_modulus));
}

MonomialOperator compose(const MonomialOperator& s, const MonomialOperator& t) {
    if (s.dimension != t.dimension)
        throw domain_error("compose: dimension mismatch");
    if (s.phase_modulus != t.phase_modulus)
        throw domain_error("compose: phase modulus mismatch");
    const int64_t d = s.dimension, m = s.phase_modulus;
    MonomialOperator out;
    out.dimension = d;
    out.phase_modulus = m;
    out.perm.resize(static_cast<size_t>(d));
    out.phase.resize(static_cast<size_t>(d));
    for (int64_t i = 0; i < d; ++i) {
        uint32_t ti = t.perm[static_cast<size_t>(i)];
        out.perm[static_cast<size_t>(i)] = s.perm[ti];
        out.phase[static_cast<size_t>(i)] =
            mod_floor(t.phase[static_cast<size_t>(i)] + s.phase[ti], m);
    }
    return out;
}

MonomialOperator inverse(const MonomialOperator& t) {
    const int64_t d = t.dimension, m = t.phase_modulus;
    MonomialOperator out;
    out.dimension = d;
    out.phase_modulus = m;
    out.perm.resize(static_cast<size_t>(d));
    out.phase.resize(static_cast<size_t>(d));
    for (int64_t i = 0; i < d; ++i) {
        uint32_t j = t.perm[static_cast<size_t>(i)];
        out.perm[j] = static_cast<uint32_t>(i);
        out.phase[j] = mod_floor(-t.phase[static_cast<size_t>(i)], m);
    }
    return out;
}

MonomialOperator scale_phase(const MonomialOperator& t, int64_t k) {
    MonomialOperator out = t;
    for (int64_t& ph : out.phase) ph = mod_floor(ph + k, t.phase_modulus);
    return out;
}

std::optional<int64_t> scalar_phase(const MonomialOperator& t) {
    for (int64_t i = 0; i < t.dimension; ++i)
        if (t.perm[static_cast<size_t>(i)] != i) return std::nullopt;
    for (int64_t i = 1; i < t.dimension; ++i)
        if (t.phase[static_cast<size_t>(i)] != t.phase[0]) return std::nullopt;
    return t.dimension > 0 ? t.phase[0] : 0;
}

MonomialOperator embed_phase_modulus(const MonomialOperator& t, int64_t new_modulus) {
    if (new_modulus % t.phase_modulus != 0)
        throw domain_error("phase modulus embedding requires divisibility");
    const int64_t k = new_modulus / t.phase_modulus;
    MonomialOperator out = t;
    out.phase_modulus = new_modulus;
    for (int64_t& ph : out.phase) ph = checked_mul(ph, k);
    return out;
}

} // namespace projcoh
