#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace projcoh {

// Finite group as a multiplication table with the identity pinned at index 0.
// Immutable after construction; all queries are pure.
class FiniteGroup {
public:
    // Empty shell; every populated instance comes from from_table.
    FiniteGroup() = default;

    // Validates the three table axioms (identity at 0, associativity,
    // row/column bijectivity) and throws domain_error naming the first
    // violation otherwise.
    static FiniteGroup from_table(std::vector<std::vector<int64_t>> table,
                                  std::vector<std::string> names = {});

    int64_t order() const { return order_; }
    int64_t mul(int64_t g, int64_t h) const { return table_[static_cast<size_t>(g * order_ + h)]; }
    int64_t inverse(int64_t g) const { return inv_[static_cast<size_t>(g)]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int64_t>& flat_table() const { return table_; }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    int64_t order_ = 0;
    std::vector<int64_t> table_; // row-major, order x order
    std::vector<int64_t> inv_;
    std::vector<std::string> names_;
};

// Preset families. Element indexing is part of the contract:
//   cyclic(n):        residues 0..n-1, product = addition mod n
//   direct_product:   pairs (a,b) at index a*|H| + b (lexicographic)
//   dihedral(n):      order 2n; 0..n-1 are rotations r^k, n+k is s*r^k
//   quaternion8:      0..7 = 1, i, j, k, -1, -i, -j, -k
//   symmetric(n):     permutations of 0..n-1 in lexicographic one-line order,
//                     product = composition (left acts after right)
FiniteGroup cyclic_group(int64_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup dihedral_group(int64_t n);
FiniteGroup quaternion8();
FiniteGroup symmetric_group(int64_t n); // n <= 5

// Parses a preset spec string: "cyclic:6", "dihedral:4", "quaternion8",
// "klein4", "symmetric:3", or "product(a,b)" with nested specs.
// max_order guards against accidental blowup (0 disables the guard).
FiniteGroup preset_group(const std::string& spec, int64_t max_order = 64);

// Smallest k >= 1 with g^k = identity.
int64_t element_order(const FiniteGroup& g, int64_t elem);

// {g : gh = hg for all h}, ascending.
std::vector<int64_t> center(const FiniteGroup& g);

// Group homomorphism given by its value table; construction verifies
// map[0] = 0 and map[g*h] = map[g]*map[h].
struct GroupHom {
    int64_t source_order = 0;
    int64_t target_order = 0;
    std::vector<int64_t> map;

    static GroupHom checked(const FiniteGroup& src, const FiniteGroup& dst,
                            std::vector<int64_t> map);
};

// Brute-force isomorphism search, test support only (order <= 8 enforced).
bool is_isomorphic_bruteforce(const FiniteGroup& a, const FiniteGroup& b);

// Conjugates the table by a relabeling permutation with perm[0] = 0.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<int64_t>& perm);

} // namespace projcoh
