#include "core/extension.hpp"

#include "core/smith.hpp"

namespace projcoh {

CentralExtension build_central_extension(const FiniteGroup& g, const Cochain2& w) {
    check_cochain(g, w);
    if (!w.normalized())
        throw domain_error("build_central_extension: cocycle must be normalized");
    if (!is_cocycle(g, w))
        throw domain_error("build_central_extension: input is not a 2-cocycle");
    const int64_t n = g.order(), m = w.modulus;

    // Fiber shrinks to the subgroup of Z_m generated by the values.
    int64_t d = m;
    for (int64_t v : w.values) d = gcd64(d, v);
    const int64_t mp = m / d;

    Cochain2 reduced = Cochain2::zero(n, mp);
    for (size_t i = 0; i < w.values.size(); ++i)
        reduced.values[i] = w.values[i] / d;

    const int64_t total_order = n * mp;
    std::vector<std::vector<int64_t>> table(
        static_cast<size_t>(total_order), std::vector<int64_t>(static_cast<size_t>(total_order)));
    for (int64_t a = 0; a < n; ++a)
        for (int64_t t = 0; t < mp; ++t)
            for (int64_t b = 0; b < n; ++b)
                for (int64_t s = 0; s < mp; ++s) {
                    int64_t prod_g = g.mul(a, b);
                    int64_t prod_t = mod_floor(t + s + reduced.at(a, b), mp);
                    table[static_cast<size_t>(a * mp + t)][static_cast<size_t>(b * mp + s)] =
                        prod_g * mp + prod_t;
                }

    CentralExtension e{g, mp, FiniteGroup::from_table(std::move(table)), {}, {}, reduced};

    std::vector<int64_t> inj(static_cast<size_t>(mp));
    for (int64_t t = 0; t < mp; ++t) inj[static_cast<size_t>(t)] = t; // (0, t)
    e.inject = GroupHom::checked(cyclic_group(mp), e.total, std::move(inj));

    std::vector<int64_t> prj(static_cast<size_t>(total_order));
    for (int64_t x = 0; x < total_order; ++x) prj[static_cast<size_t>(x)] = x / mp;
    e.project = GroupHom::checked(e.total, g, std::move(prj));
    return e;
}

namespace {

void add_check(ExtensionReport& rep, const std::string& name, bool ok,
               const std::string& witness = "") {
    rep.checks.push_back(ExtensionCheck{name, ok, ok ? "" : witness});
}

} // namespace

ExtensionReport verify_extension(const CentralExtension& e) {
    ExtensionReport rep;
    const int64_t n = e.base.order(), mp = e.fiber_order;
    const int64_t total = e.total.order();

    add_check(rep, "total order equals |base| * fiber", total == n * mp,
              "|total| = " + std::to_string(total));

    // total group table already validated at construction time; parsing also
    // re-validates, so only the extension-specific laws remain.

    bool inj_ok = static_cast<int64_t>(e.inject.map.size()) == mp && e.inject.target_order == total;
    std::string inj_wit;
    if (inj_ok) {
        std::vector<bool> seen(static_cast<size_t>(total), false);
        for (int64_t t = 0; t < mp && inj_ok; ++t) {
            int64_t v = e.inject.map[static_cast<size_t>(t)];
            if (v < 0 || v >= total || seen[static_cast<size_t>(v)]) {
                inj_ok = false;
                inj_wit = "inject not injective at " + std::to_string(t);
            } else
                seen[static_cast<size_t>(v)] = true;
        }
        for (int64_t t = 0; t < mp && inj_ok; ++t)
            for (int64_t s = 0; s < mp && inj_ok; ++s) {
                int64_t lhs = e.inject.map[static_cast<size_t>((t + s) % mp)];
                int64_t rhs = e.total.mul(e.inject.map[static_cast<size_t>(t)],
                                          e.inject.map[static_cast<size_t>(s)]);
                if (lhs != rhs) {
                    inj_ok = false;
                    inj_wit = "inject not a homomorphism at (" + std::to_string(t) + "," +
                              std::to_string(s) + ")";
                }
            }
    } else {
        inj_wit = "inject has wrong shape";
    }
    add_check(rep, "inject is an injective homomorphism", inj_ok, inj_wit);

    bool central = true;
    std::string cen_wit;
    for (int64_t t = 0; t < mp && central; ++t) {
        int64_t z = e.inject.map[static_cast<size_t>(t)];
        for (int64_t x = 0; x < total && central; ++x)
            if (e.total.mul(z, x) != e.total.mul(x, z)) {
                central = false;
                cen_wit = "fiber element " + std::to_string(t) + " does not commute with " +
                          std::to_string(x);
            }
    }
    add_check(rep, "image of inject is central", central, cen_wit);

    bool proj_hom = static_cast<int64_t>(e.project.map.size()) == total &&
                    e.project.target_order == n;
    std::string proj_wit;
    for (int64_t x = 0; x < total && proj_hom; ++x)
        for (int64_t y = 0; y < total && proj_hom; ++y) {
            int64_t lhs = e.project.map[static_cast<size_t>(e.total.mul(x, y))];
            int64_t rhs = e.base.mul(e.project.map[static_cast<size_t>(x)],
                                     e.project.map[static_cast<size_t>(y)]);
            if (lhs != rhs) {
                proj_hom = false;
                proj_wit = "project not a homomorphism at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")";
            }
        }
    add_check(rep, "project is a homomorphism", proj_hom, proj_wit);

    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int64_t x = 0; x < total; ++x)
        if (e.project.map[static_cast<size_t>(x)] >= 0 &&
            e.project.map[static_cast<size_t>(x)] < n)
            hit[static_cast<size_t>(e.project.map[static_cast<size_t>(x)])] = true;
    bool surj = true;
    std::string surj_wit;
    for (int64_t b = 0; b < n; ++b)
        if (!hit[static_cast<size_t>(b)]) {
            surj = false;
            surj_wit = "base element " + std::to_string(b) + " not hit";
            break;
        }
    add_check(rep, "project is surjective", surj, surj_wit);

    bool comp_trivial = true;
    std::string comp_wit;
    for (int64_t t = 0; t < mp; ++t)
        if (e.project.map[static_cast<size_t>(e.inject.map[static_cast<size_t>(t)])] != 0) {
            comp_trivial = false;
            comp_wit = "project(inject(" + std::to_string(t) + ")) != identity";
            break;
        }
    add_check(rep, "project o inject is trivial", comp_trivial, comp_wit);

    bool kernel_ok = true;
    std::string ker_wit;
    std::vector<bool> in_image(static_cast<size_t>(total), false);
    for (int64_t t = 0; t < mp; ++t)
        in_image[static_cast<size_t>(e.inject.map[static_cast<size_t>(t)])] = true;
    for (int64_t x = 0; x < total; ++x) {
        bool in_ker = e.project.map[static_cast<size_t>(x)] == 0;
        if (in_ker != in_image[static_cast<size_t>(x)]) {
            kernel_ok = false;
            ker_wit = "kernel/image mismatch at element " + std::to_string(x);
            break;
        }
    }
    add_check(rep, "kernel of project equals image of inject", kernel_ok, ker_wit);

    bool law_ok = e.reduced_cocycle.group_order == n && e.reduced_cocycle.modulus == mp;
    std::string law_wit = law_ok ? "" : "reduced cocycle has wrong shape";
    for (int64_t a = 0; a < n && law_ok; ++a)
        for (int64_t t = 0; t < mp && law_ok; ++t)
            for (int64_t b = 0; b < n && law_ok; ++b)
                for (int64_t s = 0; s < mp && law_ok; ++s) {
                    int64_t expect =
                        e.base.mul(a, b) * mp + mod_floor(t + s + e.reduced_cocycle.at(a, b), mp);
                    if (e.total.mul(a * mp + t, b * mp + s) != expect) {
                        law_ok = false;
                        law_wit = "twisted product law fails at ((" + std::to_string(a) + "," +
                                  std::to_string(t) + "),(" + std::to_string(b) + "," +
                                  std::to_string(s) + "))";
                    }
                }
    add_check(rep, "total table matches the twisted product law", law_ok, law_wit);

    return rep;
}

ProjectiveRep induced_total_rep(const CentralExtension& e, const ProjectiveRep& base_rep) {
    check_rep(e.base, base_rep);
    const int64_t n = e.base.order(), mp = e.fiber_order;
    const int64_t big = lcm64(base_rep.phase_modulus, mp);

    // Consistency between the representation's cocycle and the extension's:
    // both must re-encode to the same phases mod big.
    Cochain2 from_rep = embed_modulus(base_rep.claimed_cocycle, big);
    Cochain2 from_ext = embed_modulus(e.reduced_cocycle, big);
    if (!(from_rep == from_ext))
        throw domain_error("induced_total_rep: representation cocycle does not match the extension");

    ProjectiveRep out;
    out.group_order = e.total.order();
    out.dimension = base_rep.dimension;
    out.phase_modulus = big;
    out.claimed_cocycle = Cochain2::zero(e.total.order(), big);
    out.ops.reserve(static_cast<size_t>(e.total.order()));
    const int64_t step = big / mp;
    for (int64_t a = 0; a < n; ++a)
        for (int64_t t = 0; t < mp; ++t)
            out.ops.push_back(
                scale_phase(embed_phase_modulus(base_rep.op(a), big), t * step));
    RelationReport rel = verify_relations(e.total, out);
    if (!rel.ok)
        throw internal_error("induced_total_rep: family is not multiplicative at pair (" +
                             std::to_string(rel.first_failure->first) + "," +
                             std::to_string(rel.first_failure->second) + ")");
    return out;
}

} // namespace projcoh
