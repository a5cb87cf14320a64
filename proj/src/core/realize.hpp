#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/cohomology.hpp"

namespace projcoh {

enum class AlgebraKind { jiang_su, uhf, cuntz, o_infinity, o2_standard_form };

// uhf carries n for M_{n^infty}; cuntz carries n for O_{n+1} (the paper's
// parameterization; user-facing names use the algebra subscript, so "O3"
// parses to cuntz with n = 2).
struct AlgebraDescriptor {
    AlgebraKind kind = AlgebraKind::jiang_su;
    int64_t n = 0;

    static AlgebraDescriptor parse(const std::string& token);
    std::string name() const;
    bool operator==(const AlgebraDescriptor&) const = default;
};

enum class ReasonType {
    class_trivial,       // realizable iff the class is zero
    prime_support,       // order r, realizable iff primes of r divide the base
    division_witness,    // y with n*y = x
    division_infeasible, // gcd(n, d_i) does not divide x_i
    always_finite_group, // no obstruction for finite groups
};

struct Reason {
    ReasonType type = ReasonType::class_trivial;
    bool trivial = false;                                     // class_trivial
    int64_t order = 0;                                        // prime_support
    std::vector<std::pair<int64_t, int64_t>> factorization;   // of order
    int64_t base = 0;                                         // prime_support
    int64_t offending_prime = 0;                              // 0 if none
    int64_t power = 0;         // minimal k with order | base^k, when realizable
    int64_t n = 0;                                            // division ops
    std::vector<int64_t> witness;                             // division_witness
    int64_t component = -1;                                   // infeasibility cert
    int64_t invariant_factor = 0;
    int64_t gcd_value = 0;
    int64_t residue = 0;
};

struct RealizabilityVerdict {
    AlgebraDescriptor algebra;
    bool realizable = false;
    Reason reason;
};

std::vector<std::pair<int64_t, int64_t>> factorize(int64_t v);

RealizabilityVerdict on_jiang_su(const FinAbPresentation& p, const CohomClass& x);
RealizabilityVerdict on_uhf(const FinAbPresentation& p, const CohomClass& x, int64_t n);
RealizabilityVerdict on_cuntz(const FinAbPresentation& p, const CohomClass& x, int64_t n);
RealizabilityVerdict on_o_infinity(const FinAbPresentation& p, const CohomClass& x);
RealizabilityVerdict on_o2(const FinAbPresentation& p, const CohomClass& x);

// Z^2 rotation special case: theta = num/den in lowest terms, target
// M_{n^infty}; realizable iff every prime of den divides n.
RealizabilityVerdict uhf_z2_rotation(int64_t num, int64_t den, int64_t n);

std::vector<RealizabilityVerdict> verdict_table(const FinAbPresentation& p,
                                                const CohomClass& x,
                                                const std::vector<AlgebraDescriptor>& algebras);

// Independent recomputation of a verdict's reason from (presentation, class,
// algebra) alone.
bool reverify(const FinAbPresentation& p, const CohomClass& x,
              const RealizabilityVerdict& v);

// The rotation verdict re-verifies from (num, den, n) instead.
bool reverify_rotation(int64_t num, int64_t den, const RealizabilityVerdict& v);

} // namespace projcoh
