#include "core/cochain.hpp"

#include "core/smith.hpp"

namespace projcoh {

Cochain1 Cochain1::zero(int64_t order, int64_t modulus) {
    return Cochain1{order, modulus, std::vector<int64_t>(static_cast<size_t>(order), 0)};
}

Cochain2 Cochain2::zero(int64_t order, int64_t modulus) {
    return Cochain2{order, modulus,
                    std::vector<int64_t>(static_cast<size_t>(order * order), 0)};
}

bool Cochain2::normalized() const {
    for (int64_t g = 0; g < group_order; ++g)
        if (at(g, 0) != 0 || at(0, g) != 0) return false;
    return true;
}

bool Cochain3::is_zero() const {
    for (int64_t v : values)
        if (v != 0) return false;
    return true;
}

namespace {

void check_shape(const FiniteGroup& g, int64_t group_order, int64_t modulus, size_t len,
                 size_t expected) {
    if (group_order != g.order())
        throw domain_error("cochain group order does not match the group");
    if (modulus < 1) throw domain_error("cochain modulus must be >= 1");
    if (len != expected) throw domain_error("cochain value table has the wrong shape");
}

} // namespace

void check_cochain(const FiniteGroup& g, const Cochain1& f) {
    check_shape(g, f.group_order, f.modulus, f.values.size(),
                static_cast<size_t>(g.order()));
    for (int64_t v : f.values)
        if (v < 0 || v >= f.modulus)
            throw domain_error("cochain entry not reduced mod " + std::to_string(f.modulus));
}

void check_cochain(const FiniteGroup& g, const Cochain2& w) {
    check_shape(g, w.group_order, w.modulus, w.values.size(),
                static_cast<size_t>(g.order() * g.order()));
    for (int64_t v : w.values)
        if (v < 0 || v >= w.modulus)
            throw domain_error("cochain entry not reduced mod " + std::to_string(w.modulus));
}

Cochain2 d1(const FiniteGroup& g, const Cochain1& f) {
    check_cochain(g, f);
    const int64_t n = g.order(), m = f.modulus;
    Cochain2 out = Cochain2::zero(n, m);
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b)
            out.at(a, b) = mod_floor(f.at(a) + f.at(b) - f.at(g.mul(a, b)), m);
    return out;
}

Cochain3 d2(const FiniteGroup& g, const Cochain2& w) {
    check_cochain(g, w);
    const int64_t n = g.order(), m = w.modulus;
    Cochain3 out{n, m, std::vector<int64_t>(static_cast<size_t>(n * n * n), 0)};
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b)
            for (int64_t c = 0; c < n; ++c) {
                int64_t v = w.at(b, c) - w.at(g.mul(a, b), c) + w.at(a, g.mul(b, c)) -
                            w.at(a, b);
                out.values[static_cast<size_t>((a * n + b) * n + c)] = mod_floor(v, m);
            }
    return out;
}

bool is_cocycle(const FiniteGroup& g, const Cochain2& w) {
    return d2(g, w).is_zero();
}

std::pair<Cochain2, Cochain1> normalize_cocycle(const FiniteGroup& g, const Cochain2& w) {
    if (!is_cocycle(g, w)) throw domain_error("normalize: input is not a 2-cocycle");
    const int64_t n = g.order(), m = w.modulus;
    const int64_t c = w.at(0, 0);
    Cochain1 witness{n, m, std::vector<int64_t>(static_cast<size_t>(n), c)};
    Cochain2 out = w;
    for (int64_t& v : out.values) v = mod_floor(v - c, m);
    return {std::move(out), std::move(witness)};
}

Cochain1 embed_modulus(const Cochain1& f, int64_t new_modulus) {
    if (new_modulus % f.modulus != 0)
        throw domain_error("modulus embedding requires divisibility");
    const int64_t k = new_modulus / f.modulus;
    Cochain1 out = f;
    out.modulus = new_modulus;
    for (int64_t& v : out.values) v = checked_mul(v, k);
    return out;
}

Cochain2 embed_modulus(const Cochain2& w, int64_t new_modulus) {
    if (new_modulus % w.modulus != 0)
        throw domain_error("modulus embedding requires divisibility");
    const int64_t k = new_modulus / w.modulus;
    Cochain2 out = w;
    out.modulus = new_modulus;
    for (int64_t& v : out.values) v = checked_mul(v, k);
    return out;
}

} // namespace projcoh
