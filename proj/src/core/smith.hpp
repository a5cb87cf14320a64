#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/error.hpp"

namespace projcoh {

// Overflow-checked int64 arithmetic. All lattice computations run through
// these; an overflow raises internal_error instead of wrapping silently.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// a mod m reduced into [0, m). Requires m >= 1.
int64_t mod_floor(int64_t a, int64_t m);

// floor(a / b) for b > 0.
int64_t floor_div(int64_t a, int64_t b);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

// g = ax + by with g = gcd(a,b) >= 0.
int64_t ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y);

// Dense row-major integer matrix. Small sizes only; this is exact lattice
// arithmetic, not numerics.
struct IntMat {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<int64_t> a;

    IntMat() = default;
    IntMat(int64_t r, int64_t c) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {}

    int64_t& at(int64_t r, int64_t c) { return a[static_cast<size_t>(r * cols + c)]; }
    int64_t at(int64_t r, int64_t c) const { return a[static_cast<size_t>(r * cols + c)]; }

    static IntMat identity(int64_t n);
    std::vector<int64_t> mul_vec(const std::vector<int64_t>& v) const;
    bool operator==(const IntMat&) const = default;
};

// U * A * V = diag(d) with U, V unimodular, d[0] | d[1] | ... and d[i] >= 0.
// U/Uinv and V/Vinv are tracked only when requested; untracked members are
// empty matrices.
struct SmithResult {
    std::vector<int64_t> diag; // length min(rows, cols)
    IntMat U, Uinv;            // rows x rows
    IntMat V, Vinv;            // cols x cols
};

SmithResult smith_normal_form(IntMat A, bool want_u, bool want_v);

// One integer solution of A x = b, or nullopt when the system has none.
std::optional<std::vector<int64_t>> solve_integer(const IntMat& A,
                                                  const std::vector<int64_t>& b);

} // namespace projcoh
