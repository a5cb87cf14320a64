#include <doctest.h>

#include <random>

#include "core/smith.hpp"

using namespace projcoh;

namespace {

// Wide exact matrix product for the verification oracle; transform entries
// can be large even when the inputs are small.
using Wide = __int128;
using WideMat = std::vector<std::vector<Wide>>;

WideMat widen(const IntMat& m) {
    WideMat out(static_cast<size_t>(m.rows), std::vector<Wide>(static_cast<size_t>(m.cols)));
    for (int64_t i = 0; i < m.rows; ++i)
        for (int64_t j = 0; j < m.cols; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    return out;
}

WideMat mat_mul(const WideMat& a, const WideMat& b) {
    REQUIRE(a[0].size() == b.size());
    WideMat c(a.size(), std::vector<Wide>(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            Wide v = a[i][k];
            if (v == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += v * b[k][j];
        }
    return c;
}

bool is_identity(const WideMat& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

void check_snf(const IntMat& a) {
    SmithResult s = smith_normal_form(a, true, true);
    // U * A * V is the diagonal
    WideMat uav = mat_mul(mat_mul(widen(s.U), widen(a)), widen(s.V));
    for (int64_t i = 0; i < a.rows; ++i)
        for (int64_t j = 0; j < a.cols; ++j) {
            Wide want = (i == j && i < static_cast<int64_t>(s.diag.size()))
                            ? s.diag[static_cast<size_t>(i)]
                            : 0;
            CHECK((uav[static_cast<size_t>(i)][static_cast<size_t>(j)] == want));
        }
    // divisibility chain, nonnegative
    for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
        CHECK(s.diag[i] >= 0);
        if (s.diag[i] != 0)
            CHECK(s.diag[i + 1] % s.diag[i] == 0);
        else
            CHECK(s.diag[i + 1] == 0);
    }
    // tracked inverses really invert
    CHECK(is_identity(mat_mul(widen(s.U), widen(s.Uinv))));
    CHECK(is_identity(mat_mul(widen(s.V), widen(s.Vinv))));
}

} // namespace

TEST_CASE("ext_gcd basics") {
    int64_t x, y;
    CHECK(ext_gcd(12, 18, x, y) == 6);
    CHECK(12 * x + 18 * y == 6);
    CHECK(ext_gcd(0, 0, x, y) == 0);
    CHECK(ext_gcd(-4, 6, x, y) == 2);
    CHECK(-4 * x + 6 * y == 2);
}

TEST_CASE("mod_floor reduces into [0, m)") {
    CHECK(mod_floor(-1, 4) == 3);
    CHECK(mod_floor(7, 4) == 3);
    CHECK(mod_floor(0, 1) == 0);
    CHECK(mod_floor(-8, 4) == 0);
}

TEST_CASE("smith normal form on fixed matrices") {
    IntMat a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 4;
    a.at(1, 0) = 6; a.at(1, 1) = 8;
    check_snf(a);
    SmithResult s = smith_normal_form(a, false, false);
    CHECK(s.diag == std::vector<int64_t>{2, 4}); // det 16 - 24 = -8, gcd 2

    IntMat z(3, 2); // zero matrix
    check_snf(z);

    IntMat id = IntMat::identity(4);
    SmithResult si = smith_normal_form(id, false, false);
    CHECK(si.diag == std::vector<int64_t>{1, 1, 1, 1});
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int64_t r = 1 + static_cast<int64_t>(rng() % 6);
        int64_t c = 1 + static_cast<int64_t>(rng() % 6);
        IntMat a(r, c);
        for (int64_t i = 0; i < r; ++i)
            for (int64_t j = 0; j < c; ++j)
                a.at(i, j) = static_cast<int64_t>(rng() % 21) - 10;
        check_snf(a);
    }
}

TEST_CASE("solve_integer finds and verifies solutions") {
    // 3x + 5y = 1 solvable over Z
    IntMat a(1, 2);
    a.at(0, 0) = 3; a.at(0, 1) = 5;
    auto sol = solve_integer(a, {1});
    REQUIRE(sol.has_value());
    CHECK(3 * (*sol)[0] + 5 * (*sol)[1] == 1);

    // 2x = 1 unsolvable
    IntMat b(1, 1);
    b.at(0, 0) = 2;
    CHECK(!solve_integer(b, {1}).has_value());

    // inconsistent overdetermined system
    IntMat c(2, 1);
    c.at(0, 0) = 1; c.at(1, 0) = 1;
    CHECK(!solve_integer(c, {1, 2}).has_value());

    // random consistent systems round-trip
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 30; ++trial) {
        int64_t r = 1 + static_cast<int64_t>(rng() % 4);
        int64_t cc = 1 + static_cast<int64_t>(rng() % 4);
        IntMat m(r, cc);
        for (int64_t i = 0; i < r; ++i)
            for (int64_t j = 0; j < cc; ++j) m.at(i, j) = static_cast<int64_t>(rng() % 11) - 5;
        std::vector<int64_t> x(static_cast<size_t>(cc));
        for (auto& v : x) v = static_cast<int64_t>(rng() % 9) - 4;
        std::vector<int64_t> b2 = m.mul_vec(x);
        auto found = solve_integer(m, b2);
        REQUIRE(found.has_value());
        CHECK(m.mul_vec(*found) == b2);
    }
}
