#include "core/realize.hpp"

#include <algorithm>

#include "core/smith.hpp"

namespace projcoh {

AlgebraDescriptor AlgebraDescriptor::parse(const std::string& token) {
    auto starts = [&](const char* p) { return token.rfind(p, 0) == 0; };
    if (token == "jiangsu" || token == "Z") return {AlgebraKind::jiang_su, 0};
    if (token == "Oinf" || token == "Oinfinity") return {AlgebraKind::o_infinity, 0};
    if (token == "O2") return {AlgebraKind::o2_standard_form, 0};
    if (starts("uhf:")) {
        int64_t n = std::stoll(token.substr(4));
        if (n < 1) throw domain_error("uhf parameter must be >= 1");
        return {AlgebraKind::uhf, n};
    }
    if (starts("cuntz:")) {
        int64_t n = std::stoll(token.substr(6));
        if (n < 1) throw domain_error("cuntz parameter must be >= 1");
        return {AlgebraKind::cuntz, n};
    }
    if (token.size() > 1 && token[0] == 'O' &&
        std::all_of(token.begin() + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        int64_t sub = std::stoll(token.substr(1));
        if (sub < 2) throw domain_error("Cuntz algebra subscript must be >= 2");
        return {AlgebraKind::cuntz, sub - 1};
    }
    throw domain_error("unknown algebra '" + token + "'");
}

std::string AlgebraDescriptor::name() const {
    switch (kind) {
        case AlgebraKind::jiang_su: return "jiangsu";
        case AlgebraKind::uhf: return "uhf:" + std::to_string(n);
        case AlgebraKind::cuntz: return "O" + std::to_string(n + 1);
        case AlgebraKind::o_infinity: return "Oinf";
        case AlgebraKind::o2_standard_form: return "O2";
    }
    return "?";
}

std::vector<std::pair<int64_t, int64_t>> factorize(int64_t v) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        int64_t e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

namespace {

int64_t checked_class_order(const FinAbPresentation& p, const CohomClass& x) {
    return class_order(p, x); // throws on shape mismatch
}

// Prime-support decision shared by uhf and the rotation case: is every
// prime of r a divisor of base?
Reason prime_support_reason(int64_t r, int64_t base, bool& realizable) {
    Reason reason;
    reason.type = ReasonType::prime_support;
    reason.order = r;
    reason.base = base;
    reason.factorization = factorize(r);
    realizable = true;
    for (const auto& [prime, exp] : reason.factorization) {
        if (base % prime != 0) {
            realizable = false;
            reason.offending_prime = prime;
            break;
        }
    }
    if (realizable) {
        // minimal k with r | base^k
        int64_t k = 0;
        for (const auto& [prime, exp] : reason.factorization) {
            int64_t be = 0, b = base;
            while (b % prime == 0) {
                b /= prime;
                ++be;
            }
            k = std::max(k, (exp + be - 1) / be);
        }
        reason.power = k;
    }
    return reason;
}

} // namespace

RealizabilityVerdict on_jiang_su(const FinAbPresentation& p, const CohomClass& x) {
    checked_class_order(p, x);
    RealizabilityVerdict v;
    v.algebra = {AlgebraKind::jiang_su, 0};
    v.realizable = x.is_zero();
    v.reason.type = ReasonType::class_trivial;
    v.reason.trivial = x.is_zero();
    return v;
}

RealizabilityVerdict on_uhf(const FinAbPresentation& p, const CohomClass& x, int64_t n) {
    if (n < 1) throw domain_error("on_uhf: n must be >= 1");
    RealizabilityVerdict v;
    v.algebra = {AlgebraKind::uhf, n};
    int64_t r = checked_class_order(p, x);
    v.reason = prime_support_reason(r, n, v.realizable);
    return v;
}

RealizabilityVerdict on_cuntz(const FinAbPresentation& p, const CohomClass& x, int64_t n) {
    if (n < 1) throw domain_error("on_cuntz: n must be >= 1");
    RealizabilityVerdict v;
    v.algebra = {AlgebraKind::cuntz, n};
    v.reason.n = n;
    std::optional<CohomClass> y = solve_division(p, x, n);
    if (y) {
        v.realizable = true;
        v.reason.type = ReasonType::division_witness;
        v.reason.witness = y->coords;
        return v;
    }
    v.realizable = false;
    v.reason.type = ReasonType::division_infeasible;
    for (size_t i = 0; i < x.coords.size(); ++i) {
        int64_t d = p.invariant_factors[i];
        int64_t nn = mod_floor(n, d);
        int64_t g = gcd64(nn == 0 ? d : nn, d);
        if (x.coords[i] % g != 0) {
            v.reason.component = static_cast<int64_t>(i);
            v.reason.invariant_factor = d;
            v.reason.gcd_value = g;
            v.reason.residue = x.coords[i];
            break;
        }
    }
    return v;
}

RealizabilityVerdict on_o_infinity(const FinAbPresentation& p, const CohomClass& x) {
    checked_class_order(p, x);
    RealizabilityVerdict v;
    v.algebra = {AlgebraKind::o_infinity, 0};
    // Finite presentation: the only element divisible by every k is 0.
    v.realizable = x.is_zero();
    v.reason.type = ReasonType::class_trivial;
    v.reason.trivial = x.is_zero();
    return v;
}

RealizabilityVerdict on_o2(const FinAbPresentation& p, const CohomClass& x) {
    checked_class_order(p, x);
    RealizabilityVerdict v;
    v.algebra = {AlgebraKind::o2_standard_form, 0};
    v.realizable = true;
    v.reason.type = ReasonType::always_finite_group;
    return v;
}

RealizabilityVerdict uhf_z2_rotation(int64_t num, int64_t den, int64_t n) {
    if (n < 1) throw domain_error("uhf_z2_rotation: n must be >= 1");
    if (den < 1 || num < 0 || num >= den || gcd64(num, den) != 1)
        throw domain_error("uhf_z2_rotation: theta must be p/q in lowest terms with 0 <= p/q < 1");
    RealizabilityVerdict v;
    v.algebra = {AlgebraKind::uhf, n};
    // The order of exp(2 pi i p/q) in the circle is q, except theta = 0.
    int64_t r = num == 0 ? 1 : den;
    v.reason = prime_support_reason(r, n, v.realizable);
    return v;
}

std::vector<RealizabilityVerdict> verdict_table(const FinAbPresentation& p,
                                                const CohomClass& x,
                                                const std::vector<AlgebraDescriptor>& algebras) {
    std::vector<RealizabilityVerdict> out;
    out.reserve(algebras.size());
    for (const AlgebraDescriptor& a : algebras) {
        switch (a.kind) {
            case AlgebraKind::jiang_su: out.push_back(on_jiang_su(p, x)); break;
            case AlgebraKind::uhf: out.push_back(on_uhf(p, x, a.n)); break;
            case AlgebraKind::cuntz: out.push_back(on_cuntz(p, x, a.n)); break;
            case AlgebraKind::o_infinity: out.push_back(on_o_infinity(p, x)); break;
            case AlgebraKind::o2_standard_form: out.push_back(on_o2(p, x)); break;
        }
    }
    return out;
}

namespace {

bool reverify_prime_support(int64_t r, const RealizabilityVerdict& v) {
    if (v.reason.type != ReasonType::prime_support) return false;
    if (v.reason.order != r) return false;
    if (v.reason.factorization != factorize(r)) return false;
    const int64_t base = v.reason.base;
    if (base < 1) return false;
    bool expect = true;
    for (const auto& [prime, exp] : v.reason.factorization)
        if (base % prime != 0) expect = false;
    if (expect != v.realizable) return false;
    if (v.realizable) {
        // r | base^power with power minimal; peel one gcd per factor of base
        auto divides_power = [&](int64_t kk) {
            int64_t rem = r;
            for (int64_t i = 0; i < kk && rem > 1; ++i) rem /= gcd64(rem, base);
            return rem == 1;
        };
        int64_t k = v.reason.power;
        if (k < 0 || !divides_power(k)) return false;
        if (k > 0 && divides_power(k - 1)) return false;
        if (k == 0 && r != 1) return false;
    } else {
        int64_t p = v.reason.offending_prime;
        if (p < 2 || r % p != 0 || base % p == 0) return false;
    }
    return true;
}

} // namespace

bool reverify(const FinAbPresentation& p, const CohomClass& x,
              const RealizabilityVerdict& v) {
    switch (v.algebra.kind) {
        case AlgebraKind::jiang_su:
        case AlgebraKind::o_infinity:
            return v.reason.type == ReasonType::class_trivial &&
                   v.reason.trivial == x.is_zero() && v.realizable == x.is_zero();
        case AlgebraKind::uhf:
            return v.reason.base == v.algebra.n &&
                   reverify_prime_support(class_order(p, x), v);
        case AlgebraKind::cuntz: {
            const int64_t n = v.algebra.n;
            if (v.reason.n != n) return false;
            if (v.realizable) {
                if (v.reason.type != ReasonType::division_witness) return false;
                if (v.reason.witness.size() != x.coords.size()) return false;
                for (size_t i = 0; i < x.coords.size(); ++i) {
                    int64_t d = p.invariant_factors[i];
                    if (mod_floor(checked_mul(n, v.reason.witness[i]) - x.coords[i], d) != 0)
                        return false;
                }
                return true;
            }
            if (v.reason.type != ReasonType::division_infeasible) return false;
            int64_t i = v.reason.component;
            if (i < 0 || i >= static_cast<int64_t>(x.coords.size())) return false;
            int64_t d = p.invariant_factors[static_cast<size_t>(i)];
            if (v.reason.invariant_factor != d) return false;
            int64_t nn = mod_floor(n, d);
            int64_t g = gcd64(nn == 0 ? d : nn, d);
            if (v.reason.gcd_value != g) return false;
            if (v.reason.residue != x.coords[static_cast<size_t>(i)]) return false;
            return v.reason.residue % g != 0;
        }
        case AlgebraKind::o2_standard_form:
            return v.realizable && v.reason.type == ReasonType::always_finite_group;
    }
    return false;
}

bool reverify_rotation(int64_t num, int64_t den, const RealizabilityVerdict& v) {
    if (v.algebra.kind != AlgebraKind::uhf) return false;
    if (den < 1 || num < 0 || num >= den || gcd64(num, den) != 1) return false;
    return reverify_prime_support(num == 0 ? 1 : den, v);
}

} // namespace projcoh
