#include "core/projrep.hpp"

#include <string>

#include "core/smith.hpp"

namespace projcoh {

RelationReport verify_relations(const FiniteGroup& g, const ProjectiveRep& r) {
    RelationReport rep;
    const int64_t n = g.order();
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b) {
            ++rep.pairs_checked;
            MonomialOperator lhs = compose(r.op(a), r.op(b));
            MonomialOperator rhs = scale_phase(r.op(g.mul(a, b)), r.claimed_cocycle.at(a, b));
            if (!(lhs == rhs)) {
                rep.ok = false;
                if (!rep.first_failure) rep.first_failure = {a, b};
            }
        }
    return rep;
}

void check_rep(const FiniteGroup& g, const ProjectiveRep& r) {
    if (r.group_order != g.order())
        throw domain_error("representation group order does not match the group");
    if (static_cast<int64_t>(r.ops.size()) != g.order())
        throw domain_error("representation must have one operator per group element");
    for (const MonomialOperator& op : r.ops) {
        check_operator(op);
        if (op.dimension != r.dimension || op.phase_modulus != r.phase_modulus)
            throw domain_error("operator dimension or modulus mismatch inside representation");
    }
    check_cochain(g, r.claimed_cocycle);
    if (r.claimed_cocycle.modulus != r.phase_modulus)
        throw domain_error("claimed cocycle modulus must equal the phase modulus");
    if (r.claimed_cocycle.normalized() &&
        !(r.op(0) == MonomialOperator::identity(r.dimension, r.phase_modulus)))
        throw domain_error("identity element must act as the identity operator");
}

ProjectiveRep regular_rep(const FiniteGroup& g, const Cochain2& w) {
    check_cochain(g, w);
    if (!w.normalized()) throw domain_error("regular_rep: cocycle must be normalized");
    if (!is_cocycle(g, w)) throw domain_error("regular_rep: input is not a 2-cocycle");
    const int64_t n = g.order(), m = w.modulus;
    ProjectiveRep r;
    r.group_order = n;
    r.dimension = n;
    r.phase_modulus = m;
    r.claimed_cocycle = w;
    r.ops.resize(static_cast<size_t>(n));
    for (int64_t a = 0; a < n; ++a) {
        MonomialOperator& op = r.ops[static_cast<size_t>(a)];
        op.dimension = n;
        op.phase_modulus = m;
        op.perm.resize(static_cast<size_t>(n));
        op.phase.resize(static_cast<size_t>(n));
        for (int64_t h = 0; h < n; ++h) {
            op.perm[static_cast<size_t>(h)] = static_cast<uint32_t>(g.mul(a, h));
            op.phase[static_cast<size_t>(h)] = w.at(a, h);
        }
    }
    RelationReport rel = verify_relations(g, r);
    if (!rel.ok) throw internal_error("regular_rep: relation verification failed");
    return r;
}

namespace {

// Basis bookkeeping for the tensor construction. A basis state assigns to
// each group position k a matrix unit (i_k, j_k) with 0 <= i_k, j_k < n.
// The eigenvalue-l subspace fixes sum(i_k - j_k) = l mod n; its free digits
// are all i_k plus j_k for k >= 1, little-endian, so the dimension is
// n^(2*order - 1).
struct TensorBasis {
    int64_t order;  // group order
    int64_t n;      // phase modulus
    int64_t level;  // eigenvalue l, or -1 for the full space

    int64_t dimension() const {
        int64_t digits = level >= 0 ? 2 * order - 1 : 2 * order;
        int64_t d = 1;
        for (int64_t i = 0; i < digits; ++i) d = checked_mul(d, n);
        return d;
    }

    void decode(int64_t idx, std::vector<int64_t>& iv, std::vector<int64_t>& jv) const {
        for (int64_t k = 0; k < order; ++k) {
            iv[static_cast<size_t>(k)] = idx % n;
            idx /= n;
        }
        for (int64_t k = level >= 0 ? 1 : 0; k < order; ++k) {
            jv[static_cast<size_t>(k)] = idx % n;
            idx /= n;
        }
        if (level >= 0) {
            int64_t s = -level;
            for (int64_t k = 0; k < order; ++k) s += iv[static_cast<size_t>(k)];
            for (int64_t k = 1; k < order; ++k) s -= jv[static_cast<size_t>(k)];
            jv[0] = mod_floor(s, n);
        }
    }

    int64_t encode(const std::vector<int64_t>& iv, const std::vector<int64_t>& jv) const {
        int64_t idx = 0;
        for (int64_t k = order - 1; k >= (level >= 0 ? 1 : 0); --k)
            idx = idx * n + jv[static_cast<size_t>(k)];
        for (int64_t k = order - 1; k >= 0; --k) idx = idx * n + iv[static_cast<size_t>(k)];
        return idx;
    }
};

// pi(g) on the given basis: shift positions by k -> g*k after applying the
// diagonal phase sum(lam(g,k) * (i_k - j_k)).
MonomialOperator tensor_pi(const FiniteGroup& grp, const Cochain2& lam,
                           const TensorBasis& basis, int64_t g) {
    const int64_t ord = basis.order, n = basis.n;
    const int64_t dim = basis.dimension();
    MonomialOperator op;
    op.dimension = dim;
    op.phase_modulus = n;
    op.perm.resize(static_cast<size_t>(dim));
    op.phase.resize(static_cast<size_t>(dim));
    std::vector<int64_t> iv(static_cast<size_t>(ord)), jv(static_cast<size_t>(ord));
    std::vector<int64_t> pi(static_cast<size_t>(ord)), pj(static_cast<size_t>(ord));
    const int64_t ginv = grp.inverse(g);
    for (int64_t idx = 0; idx < dim; ++idx) {
        basis.decode(idx, iv, jv);
        int64_t ph = 0;
        for (int64_t k = 0; k < ord; ++k)
            ph += lam.at(g, k) * (iv[static_cast<size_t>(k)] - jv[static_cast<size_t>(k)]);
        for (int64_t k = 0; k < ord; ++k) {
            int64_t src = grp.mul(ginv, k);
            pi[static_cast<size_t>(k)] = iv[static_cast<size_t>(src)];
            pj[static_cast<size_t>(k)] = jv[static_cast<size_t>(src)];
        }
        op.perm[static_cast<size_t>(idx)] = static_cast<uint32_t>(basis.encode(pi, pj));
        op.phase[static_cast<size_t>(idx)] = mod_floor(ph, n);
    }
    return op;
}

MonomialOperator tensor_adu(const TensorBasis& basis) {
    const int64_t ord = basis.order, n = basis.n;
    const int64_t dim = basis.dimension();
    MonomialOperator op = MonomialOperator::identity(dim, n);
    std::vector<int64_t> iv(static_cast<size_t>(ord)), jv(static_cast<size_t>(ord));
    for (int64_t idx = 0; idx < dim; ++idx) {
        basis.decode(idx, iv, jv);
        int64_t s = 0;
        for (int64_t k = 0; k < ord; ++k)
            s += iv[static_cast<size_t>(k)] - jv[static_cast<size_t>(k)];
        op.phase[static_cast<size_t>(idx)] = mod_floor(s, n);
    }
    return op;
}

} // namespace

ProjectiveRep lemma_rep(const FiniteGroup& g, const Cochain2& lam, int64_t dim_cap,
                        LemmaDiagnostics* diag) {
    check_cochain(g, lam);
    if (!lam.normalized()) throw domain_error("lemma_rep: cocycle must be normalized");
    if (!is_cocycle(g, lam)) throw domain_error("lemma_rep: input is not a 2-cocycle");
    const int64_t ord = g.order(), n = lam.modulus;

    if (n == 1) {
        // Trivial class: the one-dimensional trivial representation.
        ProjectiveRep r;
        r.group_order = ord;
        r.dimension = 1;
        r.phase_modulus = 1;
        r.claimed_cocycle = Cochain2::zero(ord, 1);
        r.ops.assign(static_cast<size_t>(ord), MonomialOperator::identity(1, 1));
        if (diag) {
            diag->full_dimension = 1;
            diag->eigenspace_sizes = {1};
            diag->commutes_with_adu = true;
        }
        return r;
    }

    // dimension n^(2|G|-1), checked against the cap before any allocation
    {
        int64_t d = 1;
        for (int64_t i = 0; i < 2 * ord - 1; ++i) {
            if (d > dim_cap / n)
                throw resource_error("lemma_rep dimension n^(2|G|-1) exceeds the cap of " +
                                     std::to_string(dim_cap));
            d *= n;
        }
        if (d > dim_cap)
            throw resource_error("lemma_rep dimension n^(2|G|-1) exceeds the cap of " +
                                 std::to_string(dim_cap));
    }

    TensorBasis k1{ord, n, 1};
    ProjectiveRep r;
    r.group_order = ord;
    r.dimension = k1.dimension();
    r.phase_modulus = n;
    r.claimed_cocycle = lam;
    r.ops.reserve(static_cast<size_t>(ord));
    for (int64_t a = 0; a < ord; ++a) r.ops.push_back(tensor_pi(g, lam, k1, a));

    RelationReport rel = verify_relations(g, r);
    if (!rel.ok)
        throw internal_error("lemma_rep: relation verification failed at pair (" +
                             std::to_string(rel.first_failure->first) + "," +
                             std::to_string(rel.first_failure->second) + ")");

    if (diag) {
        TensorBasis full{ord, n, -1};
        diag->full_dimension = full.dimension();
        diag->eigenspace_sizes.assign(static_cast<size_t>(n), 0);
        std::vector<int64_t> iv(static_cast<size_t>(ord)), jv(static_cast<size_t>(ord));
        for (int64_t idx = 0; idx < diag->full_dimension; ++idx) {
            full.decode(idx, iv, jv);
            int64_t s = 0;
            for (int64_t k = 0; k < ord; ++k)
                s += iv[static_cast<size_t>(k)] - jv[static_cast<size_t>(k)];
            ++diag->eigenspace_sizes[static_cast<size_t>(mod_floor(s, n))];
        }
        MonomialOperator adu = tensor_adu(full);
        diag->commutes_with_adu = true;
        for (int64_t a = 0; a < ord && diag->commutes_with_adu; ++a) {
            MonomialOperator pia = tensor_pi(g, lam, full, a);
            diag->commutes_with_adu = compose(pia, adu) == compose(adu, pia);
        }
    }
    return r;
}

nonscalar_defect_error::nonscalar_defect_error(int64_t g_, int64_t h_, MonomialOperator d)
    : domain_error("family is not a projective representation: non-scalar defect at pair (" +
                   std::to_string(g_) + "," + std::to_string(h_) + ")"),
      g(g_), h(h_), defect(std::move(d)) {}

Cochain2 extract_cocycle(const FiniteGroup& g, const ProjectiveRep& r) {
    check_rep(g, r);
    const int64_t n = g.order();
    Cochain2 w = Cochain2::zero(n, r.phase_modulus);
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b) {
            MonomialOperator defect =
                compose(compose(r.op(a), r.op(b)), inverse(r.op(g.mul(a, b))));
            std::optional<int64_t> ph = scalar_phase(defect);
            if (!ph) throw nonscalar_defect_error(a, b, std::move(defect));
            w.at(a, b) = *ph;
        }
    if (!is_cocycle(g, w))
        throw internal_error("extract_cocycle: extracted table violates the cocycle identity");
    return w;
}

ProjectiveRep lift_rep(const FiniteGroup& g, const ProjectiveRep& r, const Cochain1& f) {
    check_rep(g, r);
    check_cochain(g, f);
    const int64_t big = lcm64(r.phase_modulus, f.modulus);
    Cochain1 fe = embed_modulus(f, big);
    Cochain2 claimed = embed_modulus(r.claimed_cocycle, big);
    if (!(d1(g, fe) == claimed))
        throw domain_error("lift_rep: witness does not satisfy d1 f = claimed cocycle");

    ProjectiveRep out;
    out.group_order = r.group_order;
    out.dimension = r.dimension;
    out.phase_modulus = big;
    out.claimed_cocycle = Cochain2::zero(g.order(), big);
    out.ops.reserve(r.ops.size());
    for (int64_t a = 0; a < g.order(); ++a)
        out.ops.push_back(
            scale_phase(embed_phase_modulus(r.op(a), big), -fe.at(a)));
    RelationReport rel = verify_relations(g, out);
    if (!rel.ok) throw internal_error("lift_rep: lifted family is not multiplicative");
    return out;
}

} // namespace projcoh
