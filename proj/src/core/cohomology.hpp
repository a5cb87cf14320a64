#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "core/cochain.hpp"
#include "core/group.hpp"
#include "core/smith.hpp"

namespace projcoh {

// Coordinate solve data from the two normal-form passes. Maps any cocycle
// (as a normalized coordinate vector) to its class coordinates.
struct ZmSolveData {
    IntMat v_inv;                // dim x dim, from the constraint SNF
    std::vector<int64_t> tvec;   // lattice scaling, length dim
    IntMat u2;                   // dim x dim, from the relation SNF
    std::vector<int64_t> dvec;   // all dim diagonal entries of the relation SNF
    std::vector<int64_t> kept;   // indices with dvec > 1, ascending
};

// A finite abelian group presented by invariant factors d1 | d2 | ... (each
// > 1) together with representative cocycles for the generators and the
// solve data needed to coordinatize arbitrary cocycles. Presentations parsed
// from the public JSON format carry no solve data.
struct FinAbPresentation {
    int64_t group_order = 1;
    int64_t modulus = 1; // ambient coefficient ring Z_m
    std::vector<int64_t> invariant_factors;
    std::vector<Cochain2> generators;
    std::optional<ZmSolveData> solve;

    int64_t class_count() const;
};

struct CohomClass {
    std::vector<int64_t> coords; // coords[i] in [0, invariant_factors[i])
    bool is_zero() const {
        for (int64_t c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const CohomClass&) const = default;
};

// H^2(G, Z_m) over the normalized bar complex, via integer Smith normal form
// with m * identity rows adjoined.
FinAbPresentation h2_zm(const FiniteGroup& g, int64_t m);

// Generating set of Hom(G, Z_m) with the generator orders.
std::vector<std::pair<Cochain1, int64_t>> homs_to_zm(const FiniteGroup& g, int64_t m);

// Connecting homomorphism of Z_m -> T -> T applied to a homomorphism chi,
// using canonical representatives: (chi(g) + chi(h) - chi(gh)) / m.
Cochain2 delta_connecting(const FiniteGroup& g, const Cochain1& chi);

// H^2(G, T) as H^2(G, Z_m) modulo the image of the connecting map, with
// m = |G| unless overridden.
FinAbPresentation schur_multiplier(const FiniteGroup& g,
                                   std::optional<int64_t> modulus_override = std::nullopt);

// Witness f with d1 f = w over Z_m, or nullopt. Returned witnesses are
// re-verified exactly. A cocycle that does not vanish on identity pairs is
// never d1 of a 1-cochain with f(0) = 0, so it reports nullopt.
std::optional<Cochain1> is_coboundary_zm(const FiniteGroup& g, const Cochain2& w);

// Class of w in the presentation. The modulus of w must divide the
// presentation modulus; w is normalized internally (coboundary shift).
CohomClass class_coordinates(const FiniteGroup& g, const Cochain2& w,
                             const FinAbPresentation& p);

// Least r >= 1 with r * x = 0.
int64_t class_order(const FinAbPresentation& p, const CohomClass& x);

// Normalized cocycle with modulus r = class_order(x) representing x in the
// Schur presentation p. Found by mapping the generators of H^2(G, Z_r) into
// p and solving the congruence system; failure to solve is an internal bug.
Cochain2 representative_of_order(const FiniteGroup& g, const FinAbPresentation& p,
                                 const CohomClass& x);

// Some y with n * y = x, or nullopt when no component solution exists.
std::optional<CohomClass> solve_division(const FinAbPresentation& p, const CohomClass& x,
                                         int64_t n);

// Deterministic seeded cocycle: random class combination plus a random
// coboundary, over the presentation's coefficient modulus.
Cochain2 random_cocycle(const FiniteGroup& g, const FinAbPresentation& p,
                        std::mt19937_64& rng);

// Enumerates every class of the presentation (mixed-radix order).
std::vector<CohomClass> all_classes(const FinAbPresentation& p);

} // namespace projcoh
