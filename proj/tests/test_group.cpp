#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "core/group.hpp"
#include "helpers.hpp"

using namespace projcoh;
using testutil::preset_census;

TEST_CASE("preset identity cases") {
    CHECK(preset_group("cyclic:1").order() == 1);
    CHECK(preset_group("trivial").order() == 1);
    CHECK(preset_group("cyclic:4").order() == 4);
    CHECK(preset_group("dihedral:4").order() == 8);
    CHECK(preset_group("symmetric:4").order() == 24);
}

TEST_CASE("klein four has all non-identity elements of order 2") {
    FiniteGroup v4 = preset_group("klein4");
    REQUIRE(v4.order() == 4);
    CHECK(element_order(v4, 0) == 1);
    for (int64_t g = 1; g < 4; ++g) CHECK(element_order(v4, g) == 2);
}

TEST_CASE("quaternion8 has exactly one element of order 2") {
    FiniteGroup q8 = quaternion8();
    int count = 0;
    for (int64_t g = 0; g < 8; ++g)
        if (element_order(q8, g) == 2) ++count;
    CHECK(count == 1);
    CHECK(element_order(q8, 4) == 2); // -1
    CHECK(element_order(q8, 1) == 4); // i
}

TEST_CASE("element_order basics") {
    FiniteGroup c4 = cyclic_group(4);
    CHECK(element_order(c4, 0) == 1);
    CHECK(element_order(c4, 1) == 4);
    CHECK(element_order(c4, 2) == 2);
    CHECK_THROWS_AS(element_order(c4, 7), domain_error);
}

TEST_CASE("centers") {
    CHECK(center(cyclic_group(6)).size() == 6);
    CHECK(center(dihedral_group(4)).size() == 2);
    CHECK(center(quaternion8()).size() == 2);
    CHECK(center(symmetric_group(3)) == std::vector<int64_t>{0});
}

TEST_CASE("center is a subgroup") {
    for (const auto& [name, g] : preset_census(24)) {
        CAPTURE(name);
        std::vector<int64_t> z = center(g);
        REQUIRE(!z.empty());
        CHECK(z[0] == 0);
        for (int64_t a : z)
            for (int64_t b : z) {
                int64_t p = g.mul(a, b);
                CHECK(std::find(z.begin(), z.end(), p) != z.end());
            }
        for (int64_t a : z)
            CHECK(std::find(z.begin(), z.end(), g.inverse(a)) != z.end());
    }
}

TEST_CASE("Lagrange: element orders divide the group order") {
    for (const auto& [name, g] : preset_census(24)) {
        CAPTURE(name);
        for (int64_t x = 0; x < g.order(); ++x) CHECK(g.order() % element_order(g, x) == 0);
    }
}

TEST_CASE("every preset validates through from_table") {
    for (const auto& [name, g] : preset_census(120)) {
        CAPTURE(name);
        std::vector<std::vector<int64_t>> t(
            static_cast<size_t>(g.order()),
            std::vector<int64_t>(static_cast<size_t>(g.order())));
        for (int64_t a = 0; a < g.order(); ++a)
            for (int64_t b = 0; b < g.order(); ++b)
                t[static_cast<size_t>(a)][static_cast<size_t>(b)] = g.mul(a, b);
        CHECK_NOTHROW(FiniteGroup::from_table(std::move(t)));
    }
}

TEST_CASE("validation error taxonomy") {
    CHECK_NOTHROW(FiniteGroup::from_table({{0}}));
    CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));

    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}),
                         doctest::Contains("not a permutation"), domain_error);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}),
                         doctest::Contains("identity not at index 0"), domain_error);
    // an order-5 loop: Latin square with identity, necessarily
    // non-associative (the only order-5 group is cyclic, but here 1*1 = 0)
    std::vector<std::vector<int64_t>> t5 = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table(t5), doctest::Contains("associativity"),
                         domain_error);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), domain_error); // out of range
}

TEST_CASE("preset spec parsing errors") {
    CHECK_THROWS_AS(preset_group("frobnicate:3"), domain_error);
    CHECK_THROWS_AS(preset_group("cyclic:"), domain_error);
    CHECK_THROWS_AS(preset_group("cyclic:0"), domain_error);
    CHECK_THROWS_AS(preset_group("symmetric:6"), domain_error);
    CHECK_THROWS_AS(preset_group("product(cyclic:2"), domain_error);
    CHECK_THROWS_AS(preset_group("cyclic:3junk"), domain_error);
    CHECK_THROWS_AS(preset_group("symmetric:5", 64), resource_error); // order 120 > cap
    CHECK_NOTHROW(preset_group("symmetric:5", 120));
}

TEST_CASE("direct product indexing is lexicographic") {
    FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(g.mul(3 + 1, 3 + 2) == 0);     // (1,1)*(1,2) = (0,0)
    CHECK(g.mul(1, 2) == 0);             // (0,1)*(0,2) = (0,0)
    CHECK(element_order(g, 3 + 1) == 6); // generator of Z6
}

TEST_CASE("hom construction checks the homomorphism law") {
    FiniteGroup c4 = cyclic_group(4), c2 = cyclic_group(2);
    CHECK_NOTHROW(GroupHom::checked(c4, c2, {0, 1, 0, 1}));
    CHECK_THROWS_AS(GroupHom::checked(c4, c2, {0, 1, 1, 0}), domain_error);
    CHECK_THROWS_AS(GroupHom::checked(c4, c2, {1, 0, 1, 0}), domain_error);
}

TEST_CASE("brute-force isomorphism on small groups") {
    CHECK(is_isomorphic_bruteforce(preset_group("klein4"), dihedral_group(2)));
    CHECK(!is_isomorphic_bruteforce(preset_group("klein4"), cyclic_group(4)));
    CHECK(!is_isomorphic_bruteforce(quaternion8(), dihedral_group(4)));
    CHECK(is_isomorphic_bruteforce(dihedral_group(3), symmetric_group(3)));
    CHECK_THROWS_AS(is_isomorphic_bruteforce(cyclic_group(9), cyclic_group(9)), domain_error);
}

TEST_CASE("relabel conjugates the table") {
    std::mt19937_64 rng(7);
    for (const auto& [name, g] : preset_census(12)) {
        CAPTURE(name);
        std::vector<int64_t> perm(static_cast<size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        FiniteGroup h = relabel(g, perm);
        for (int64_t a = 0; a < g.order(); ++a)
            CHECK(element_order(g, a) == element_order(h, perm[static_cast<size_t>(a)]));
    }
}
