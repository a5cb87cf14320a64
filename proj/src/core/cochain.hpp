#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/group.hpp"

namespace projcoh {

// Circle-valued cochains are stored as exponent tables: the entry k at
// modulus m stands for exp(2*pi*i*k/m). Entries are kept reduced in [0, m).

struct Cochain1 {
    int64_t group_order = 0;
    int64_t modulus = 1;
    std::vector<int64_t> values; // length group_order

    static Cochain1 zero(int64_t order, int64_t modulus);
    int64_t at(int64_t g) const { return values[static_cast<size_t>(g)]; }
    bool normalized() const { return values.empty() || values[0] == 0; }
    bool operator==(const Cochain1&) const = default;
};

struct Cochain2 {
    int64_t group_order = 0;
    int64_t modulus = 1;
    std::vector<int64_t> values; // row-major, group_order x group_order

    static Cochain2 zero(int64_t order, int64_t modulus);
    int64_t at(int64_t g, int64_t h) const {
        return values[static_cast<size_t>(g * group_order + h)];
    }
    int64_t& at(int64_t g, int64_t h) {
        return values[static_cast<size_t>(g * group_order + h)];
    }
    bool normalized() const;
    bool operator==(const Cochain2&) const = default;
};

struct Cochain3 {
    int64_t group_order = 0;
    int64_t modulus = 1;
    std::vector<int64_t> values; // g-major, order^3

    int64_t at(int64_t g, int64_t h, int64_t k) const {
        return values[static_cast<size_t>((g * group_order + h) * group_order + k)];
    }
    bool is_zero() const;
};

// Shape and range checks shared by every consumer.
void check_cochain(const FiniteGroup& g, const Cochain1& f);
void check_cochain(const FiniteGroup& g, const Cochain2& w);

// (d1 f)(g,h) = f(g) + f(h) - f(gh) mod m.
Cochain2 d1(const FiniteGroup& g, const Cochain1& f);

// (d2 w)(g,h,k) = w(h,k) - w(gh,k) + w(g,hk) - w(g,h) mod m.
Cochain3 d2(const FiniteGroup& g, const Cochain2& w);

bool is_cocycle(const FiniteGroup& g, const Cochain2& w);

// Shifts a cocycle by the coboundary of the constant 1-cochain with value
// w(0,0), making it vanish on identity pairs. Returns the shifted cocycle
// and the constant witness f with w' = w - d1 f.
std::pair<Cochain2, Cochain1> normalize_cocycle(const FiniteGroup& g, const Cochain2& w);

// Re-encodes values into a larger modulus (new_modulus must be a multiple).
Cochain1 embed_modulus(const Cochain1& f, int64_t new_modulus);
Cochain2 embed_modulus(const Cochain2& w, int64_t new_modulus);

} // namespace projcoh
