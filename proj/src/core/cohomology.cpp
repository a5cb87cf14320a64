#include "core/cohomology.hpp"

#include <algorithm>

namespace projcoh {

int64_t FinAbPresentation::class_count() const {
    int64_t n = 1;
    for (int64_t d : invariant_factors) n = checked_mul(n, d);
    return n;
}

namespace {

// Normalized coordinates: 2-cochains vanishing on identity pairs live in
// Z^((n-1)^2) with index (g-1)*(n-1) + (h-1); 1-cochains with f(0) = 0 live
// in Z^(n-1) with index g-1.

int64_t pair_index(int64_t n, int64_t g, int64_t h) { return (g - 1) * (n - 1) + (h - 1); }

std::vector<int64_t> normalized_coords(const Cochain2& w) {
    const int64_t n = w.group_order;
    std::vector<int64_t> x(static_cast<size_t>((n - 1) * (n - 1)), 0);
    for (int64_t g = 1; g < n; ++g)
        for (int64_t h = 1; h < n; ++h)
            x[static_cast<size_t>(pair_index(n, g, h))] = w.at(g, h);
    return x;
}

Cochain2 cochain_from_coords(int64_t n, int64_t m, const std::vector<int64_t>& x) {
    Cochain2 w = Cochain2::zero(n, m);
    for (int64_t g = 1; g < n; ++g)
        for (int64_t h = 1; h < n; ++h)
            w.at(g, h) = mod_floor(x[static_cast<size_t>(pair_index(n, g, h))], m);
    return w;
}

// d1 of the basis 1-cochain concentrated at g, in normalized coordinates.
std::vector<int64_t> d1_basis_column(const FiniteGroup& grp, int64_t g) {
    const int64_t n = grp.order();
    std::vector<int64_t> col(static_cast<size_t>((n - 1) * (n - 1)), 0);
    for (int64_t a = 1; a < n; ++a)
        for (int64_t b = 1; b < n; ++b) {
            int64_t v = 0;
            if (a == g) ++v;
            if (b == g) ++v;
            if (grp.mul(a, b) == g) --v;
            col[static_cast<size_t>(pair_index(n, a, b))] = v;
        }
    return col;
}

// Quotient of {x in Z_m^dim : (constraint rows) . x = 0 mod m} by the
// subgroup generated by the relation columns and m * Z^dim, computed by two
// integer Smith normal forms per the coefficient-lifting design.
struct ZmQuotient {
    std::vector<int64_t> factors;
    std::vector<std::vector<int64_t>> generators; // reduced mod m
    ZmSolveData solve;
};

ZmQuotient zm_quotient(int64_t dim, int64_t m,
                       const std::vector<std::vector<int64_t>>& constraint_rows,
                       const std::vector<std::vector<int64_t>>& relation_cols) {
    ZmQuotient out;
    if (dim == 0) {
        out.solve.tvec.clear();
        return out;
    }

    // Constraint pass: stack the rows over m * I and read the solution
    // lattice off the Smith form.
    const int64_t rows = static_cast<int64_t>(constraint_rows.size());
    IntMat c(rows + dim, dim);
    for (int64_t r = 0; r < rows; ++r)
        for (int64_t j = 0; j < dim; ++j)
            c.at(r, j) = constraint_rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
    for (int64_t j = 0; j < dim; ++j) c.at(rows + j, j) = m;
    SmithResult s1 = smith_normal_form(std::move(c), false, true);

    std::vector<int64_t> tvec(static_cast<size_t>(dim), 1);
    for (int64_t i = 0; i < dim; ++i) {
        int64_t si = s1.diag[static_cast<size_t>(i)];
        if (si <= 0) throw internal_error("constraint lattice lost full rank");
        tvec[static_cast<size_t>(i)] = m / gcd64(si, m);
    }

    // Relation pass: express the relation columns and m * I in the solution
    // lattice basis and take the quotient's Smith form.
    const int64_t ncols = static_cast<int64_t>(relation_cols.size()) + dim;
    IntMat rel(dim, ncols);
    auto put_column = [&](int64_t idx, const std::vector<int64_t>& colvec) {
        std::vector<int64_t> y = s1.Vinv.mul_vec(colvec);
        for (int64_t i = 0; i < dim; ++i) {
            int64_t ti = tvec[static_cast<size_t>(i)];
            if (y[static_cast<size_t>(i)] % ti != 0)
                throw internal_error("relation column is not in the solution lattice");
            rel.at(i, idx) = y[static_cast<size_t>(i)] / ti;
        }
    };
    for (size_t j = 0; j < relation_cols.size(); ++j)
        put_column(static_cast<int64_t>(j), relation_cols[j]);
    for (int64_t j = 0; j < dim; ++j) {
        std::vector<int64_t> mej(static_cast<size_t>(dim), 0);
        mej[static_cast<size_t>(j)] = m;
        put_column(static_cast<int64_t>(relation_cols.size()) + j, mej);
    }
    SmithResult s2 = smith_normal_form(std::move(rel), true, false);

    std::vector<int64_t> dvec(static_cast<size_t>(dim));
    std::vector<int64_t> kept;
    for (int64_t i = 0; i < dim; ++i) {
        int64_t di = s2.diag[static_cast<size_t>(i)];
        if (di <= 0) throw internal_error("relation lattice lost full rank");
        dvec[static_cast<size_t>(i)] = di;
        if (di > 1) kept.push_back(i);
    }

    for (int64_t i : kept) out.factors.push_back(dvec[static_cast<size_t>(i)]);

    // Generators: x = V * diag(t) * U2^-1 * e_i, reduced mod m.
    for (int64_t i : kept) {
        std::vector<int64_t> z(static_cast<size_t>(dim), 0);
        for (int64_t r = 0; r < dim; ++r)
            z[static_cast<size_t>(r)] =
                checked_mul(tvec[static_cast<size_t>(r)], s2.Uinv.at(r, i));
        std::vector<int64_t> x = s1.V.mul_vec(z);
        for (int64_t& v : x) v = mod_floor(v, m);
        out.generators.push_back(std::move(x));
    }

    out.solve = ZmSolveData{std::move(s1.Vinv), std::move(tvec), std::move(s2.U),
                            std::move(dvec), std::move(kept)};
    return out;
}

std::vector<int64_t> quotient_coords(const ZmSolveData& sd, const std::vector<int64_t>& x) {
    const int64_t dim = static_cast<int64_t>(sd.tvec.size());
    if (static_cast<int64_t>(x.size()) != dim)
        throw internal_error("quotient_coords: dimension mismatch");
    if (dim == 0) return {};
    std::vector<int64_t> y = sd.v_inv.mul_vec(x);
    for (int64_t i = 0; i < dim; ++i) {
        int64_t ti = sd.tvec[static_cast<size_t>(i)];
        if (y[static_cast<size_t>(i)] % ti != 0)
            throw domain_error("vector is not in the cocycle lattice");
        y[static_cast<size_t>(i)] /= ti;
    }
    std::vector<int64_t> c = sd.u2.mul_vec(y);
    std::vector<int64_t> coords;
    coords.reserve(sd.kept.size());
    for (int64_t i : sd.kept)
        coords.push_back(mod_floor(c[static_cast<size_t>(i)], sd.dvec[static_cast<size_t>(i)]));
    return coords;
}

std::vector<std::vector<int64_t>> d2_constraint_rows(const FiniteGroup& grp) {
    const int64_t n = grp.order();
    const int64_t dim = (n - 1) * (n - 1);
    std::vector<std::vector<int64_t>> rows;
    rows.reserve(static_cast<size_t>((n - 1) * (n - 1) * (n - 1)));
    for (int64_t g = 1; g < n; ++g)
        for (int64_t h = 1; h < n; ++h)
            for (int64_t k = 1; k < n; ++k) {
                std::vector<int64_t> row(static_cast<size_t>(dim), 0);
                auto bump = [&](int64_t a, int64_t b, int64_t c) {
                    if (a >= 1 && b >= 1)
                        row[static_cast<size_t>(pair_index(n, a, b))] += c;
                };
                bump(h, k, 1);
                bump(grp.mul(g, h), k, -1);
                bump(g, grp.mul(h, k), 1);
                bump(g, h, -1);
                rows.push_back(std::move(row));
            }
    return rows;
}

FinAbPresentation presentation_from_quotient(const FiniteGroup& grp, int64_t m,
                                             ZmQuotient q) {
    FinAbPresentation p;
    p.group_order = grp.order();
    p.modulus = m;
    p.invariant_factors = std::move(q.factors);
    for (const auto& x : q.generators)
        p.generators.push_back(cochain_from_coords(grp.order(), m, x));
    p.solve = std::move(q.solve);

    // Construction self-checks: generators are cocycles and coordinatize to
    // the standard basis vectors.
    for (size_t i = 0; i < p.generators.size(); ++i) {
        if (!is_cocycle(grp, p.generators[i]))
            throw internal_error("presentation generator is not a cocycle");
        CohomClass c = class_coordinates(grp, p.generators[i], p);
        for (size_t j = 0; j < c.coords.size(); ++j)
            if (c.coords[j] != (i == j ? 1 : 0))
                throw internal_error("presentation generator does not coordinatize to e_i");
    }
    return p;
}

} // namespace

FinAbPresentation h2_zm(const FiniteGroup& g, int64_t m) {
    if (m < 1) throw domain_error("h2_zm: modulus must be >= 1");
    const int64_t n = g.order();
    const int64_t dim = (n - 1) * (n - 1);
    std::vector<std::vector<int64_t>> relations;
    for (int64_t a = 1; a < n; ++a) relations.push_back(d1_basis_column(g, a));
    ZmQuotient q = zm_quotient(dim, m, d2_constraint_rows(g), relations);
    return presentation_from_quotient(g, m, std::move(q));
}

std::vector<std::pair<Cochain1, int64_t>> homs_to_zm(const FiniteGroup& g, int64_t m) {
    if (m < 1) throw domain_error("homs_to_zm: modulus must be >= 1");
    const int64_t n = g.order();
    const int64_t dim = n - 1;
    std::vector<std::vector<int64_t>> rows;
    for (int64_t a = 1; a < n; ++a)
        for (int64_t b = 1; b < n; ++b) {
            std::vector<int64_t> row(static_cast<size_t>(dim), 0);
            row[static_cast<size_t>(a - 1)] += 1;
            row[static_cast<size_t>(b - 1)] += 1;
            int64_t ab = g.mul(a, b);
            if (ab >= 1) row[static_cast<size_t>(ab - 1)] -= 1;
            rows.push_back(std::move(row));
        }
    ZmQuotient q = zm_quotient(dim, m, rows, {});
    std::vector<std::pair<Cochain1, int64_t>> out;
    for (size_t i = 0; i < q.generators.size(); ++i) {
        Cochain1 f{n, m, std::vector<int64_t>(static_cast<size_t>(n), 0)};
        for (int64_t a = 1; a < n; ++a)
            f.values[static_cast<size_t>(a)] = q.generators[i][static_cast<size_t>(a - 1)];
        out.emplace_back(std::move(f), q.factors[i]);
    }
    return out;
}

Cochain2 delta_connecting(const FiniteGroup& g, const Cochain1& chi) {
    check_cochain(g, chi);
    const int64_t n = g.order(), m = chi.modulus;
    if (!chi.normalized()) throw domain_error("delta_connecting: chi(identity) must be 0");
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b)
            if (mod_floor(chi.at(a) + chi.at(b) - chi.at(g.mul(a, b)), m) != 0)
                throw domain_error("delta_connecting: input is not a homomorphism");
    Cochain2 out = Cochain2::zero(n, m);
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b) {
            int64_t s = chi.at(a) + chi.at(b) - chi.at(g.mul(a, b));
            // exact by the homomorphism property; lands in {0, 1}
            out.at(a, b) = mod_floor(s / m, m);
        }
    return out;
}

FinAbPresentation schur_multiplier(const FiniteGroup& g,
                                   std::optional<int64_t> modulus_override) {
    const int64_t n = g.order();
    const int64_t m = modulus_override.value_or(n);
    if (m < 1) throw domain_error("schur_multiplier: modulus must be >= 1");
    const int64_t dim = (n - 1) * (n - 1);
    std::vector<std::vector<int64_t>> relations;
    for (int64_t a = 1; a < n; ++a) relations.push_back(d1_basis_column(g, a));
    for (const auto& [chi, ord] : homs_to_zm(g, m)) {
        Cochain2 dl = delta_connecting(g, chi);
        relations.push_back(normalized_coords(dl));
    }
    ZmQuotient q = zm_quotient(dim, m, d2_constraint_rows(g), relations);
    return presentation_from_quotient(g, m, std::move(q));
}

std::optional<Cochain1> is_coboundary_zm(const FiniteGroup& g, const Cochain2& w) {
    if (!is_cocycle(g, w)) throw domain_error("is_coboundary_zm: input is not a 2-cocycle");
    // Coboundaries of 1-cochains with f(0) = 0 vanish on identity pairs.
    if (!w.normalized()) return std::nullopt;
    const int64_t n = g.order(), m = w.modulus;
    const int64_t dim = (n - 1) * (n - 1);
    const int64_t k = n - 1;
    IntMat a(dim, k + dim);
    for (int64_t j = 1; j < n; ++j) {
        std::vector<int64_t> col = d1_basis_column(g, j);
        for (int64_t r = 0; r < dim; ++r) a.at(r, j - 1) = col[static_cast<size_t>(r)];
    }
    for (int64_t r = 0; r < dim; ++r) a.at(r, k + r) = m;
    std::optional<std::vector<int64_t>> sol = solve_integer(a, normalized_coords(w));
    if (!sol) return std::nullopt;
    Cochain1 f{n, m, std::vector<int64_t>(static_cast<size_t>(n), 0)};
    for (int64_t j = 1; j < n; ++j)
        f.values[static_cast<size_t>(j)] = mod_floor((*sol)[static_cast<size_t>(j - 1)], m);
    if (!(d1(g, f) == w)) throw internal_error("coboundary witness failed re-verification");
    return f;
}

CohomClass class_coordinates(const FiniteGroup& g, const Cochain2& w,
                             const FinAbPresentation& p) {
    check_cochain(g, w);
    if (p.group_order != g.order())
        throw domain_error("presentation belongs to a different group order");
    if (!p.solve)
        throw domain_error("presentation carries no solve data (parsed from public form)");
    if (p.modulus % w.modulus != 0)
        throw domain_error("cocycle modulus " + std::to_string(w.modulus) +
                           " incompatible with presentation modulus " +
                           std::to_string(p.modulus));
    if (!is_cocycle(g, w)) throw domain_error("class_coordinates: input is not a 2-cocycle");
    Cochain2 embedded = embed_modulus(w, p.modulus);
    Cochain2 norm = normalize_cocycle(g, embedded).first;
    return CohomClass{quotient_coords(*p.solve, normalized_coords(norm))};
}

int64_t class_order(const FinAbPresentation& p, const CohomClass& x) {
    if (x.coords.size() != p.invariant_factors.size())
        throw domain_error("class coordinate length does not match the presentation");
    int64_t r = 1;
    for (size_t i = 0; i < x.coords.size(); ++i) {
        int64_t d = p.invariant_factors[i];
        int64_t c = mod_floor(x.coords[i], d);
        r = lcm64(r, d / gcd64(d, c == 0 ? d : c));
    }
    return r;
}

Cochain2 representative_of_order(const FiniteGroup& g, const FinAbPresentation& p,
                                 const CohomClass& x) {
    const int64_t r = class_order(p, x);
    if (r == 1) return Cochain2::zero(g.order(), 1);

    FinAbPresentation pr = h2_zm(g, r);
    const int64_t gens = static_cast<int64_t>(pr.generators.size());
    const int64_t k = static_cast<int64_t>(p.invariant_factors.size());

    // Coordinates in p of each H^2(G, Z_r) generator under the coefficient
    // inclusion, then one congruence solve for the combination.
    IntMat a(k, gens + k);
    for (int64_t j = 0; j < gens; ++j) {
        CohomClass cj = class_coordinates(g, pr.generators[static_cast<size_t>(j)], p);
        for (int64_t i = 0; i < k; ++i) a.at(i, j) = cj.coords[static_cast<size_t>(i)];
    }
    for (int64_t i = 0; i < k; ++i) a.at(i, gens + i) = p.invariant_factors[static_cast<size_t>(i)];
    std::optional<std::vector<int64_t>> sol = solve_integer(a, x.coords);
    if (!sol)
        throw internal_error("representative_of_order: congruence system unsolvable");

    Cochain2 lam = Cochain2::zero(g.order(), r);
    for (int64_t j = 0; j < gens; ++j) {
        int64_t coeff = (*sol)[static_cast<size_t>(j)];
        const Cochain2& gen = pr.generators[static_cast<size_t>(j)];
        for (size_t idx = 0; idx < lam.values.size(); ++idx)
            lam.values[idx] = mod_floor(
                lam.values[idx] + checked_mul(coeff, gen.values[idx]), r);
    }
    if (!is_cocycle(g, lam))
        throw internal_error("representative_of_order: result is not a cocycle");
    if (!(class_coordinates(g, lam, p) == x))
        throw internal_error("representative_of_order: round trip failed");
    return lam;
}

std::optional<CohomClass> solve_division(const FinAbPresentation& p, const CohomClass& x,
                                         int64_t n) {
    if (x.coords.size() != p.invariant_factors.size())
        throw domain_error("class coordinate length does not match the presentation");
    if (n < 0) throw domain_error("solve_division: n must be nonnegative");
    CohomClass y;
    y.coords.resize(x.coords.size(), 0);
    for (size_t i = 0; i < x.coords.size(); ++i) {
        int64_t d = p.invariant_factors[i];
        int64_t xi = mod_floor(x.coords[i], d);
        int64_t nn = mod_floor(n, d);
        int64_t gg = gcd64(nn == 0 ? d : nn, d);
        if (xi % gg != 0) return std::nullopt;
        // n/g is invertible mod d/g
        int64_t dd = d / gg;
        if (dd == 1) {
            y.coords[i] = 0;
            continue;
        }
        int64_t u, v;
        ext_gcd(nn / gg, dd, u, v);
        y.coords[i] = mod_floor(checked_mul(xi / gg, u), dd);
    }
    return y;
}

Cochain2 random_cocycle(const FiniteGroup& g, const FinAbPresentation& p,
                        std::mt19937_64& rng) {
    if (p.group_order != g.order())
        throw domain_error("presentation belongs to a different group order");
    const int64_t n = g.order(), m = p.modulus;
    Cochain2 w = Cochain2::zero(n, m);
    for (size_t i = 0; i < p.generators.size(); ++i) {
        int64_t coeff = static_cast<int64_t>(
            rng() % static_cast<uint64_t>(p.invariant_factors[i]));
        for (size_t idx = 0; idx < w.values.size(); ++idx)
            w.values[idx] = mod_floor(w.values[idx] + coeff * p.generators[i].values[idx], m);
    }
    Cochain1 f = Cochain1::zero(n, m);
    for (int64_t a = 1; a < n; ++a)
        f.values[static_cast<size_t>(a)] = static_cast<int64_t>(rng() % static_cast<uint64_t>(m));
    Cochain2 cob = d1(g, f);
    for (size_t idx = 0; idx < w.values.size(); ++idx)
        w.values[idx] = mod_floor(w.values[idx] + cob.values[idx], m);
    return w;
}

std::vector<CohomClass> all_classes(const FinAbPresentation& p) {
    std::vector<CohomClass> out;
    const size_t k = p.invariant_factors.size();
    CohomClass cur;
    cur.coords.assign(k, 0);
    for (;;) {
        out.push_back(cur);
        size_t i = 0;
        while (i < k) {
            if (++cur.coords[i] < p.invariant_factors[i]) break;
            cur.coords[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return out;
}

} // namespace projcoh
