#include "core/group.hpp"

#include <algorithm>
#include <numeric>

namespace projcoh {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int64_t>> table,
                                    std::vector<std::string> names) {
    const int64_t n = static_cast<int64_t>(table.size());
    if (n == 0) throw domain_error("group table is empty");
    for (int64_t g = 0; g < n; ++g) {
        if (static_cast<int64_t>(table[static_cast<size_t>(g)].size()) != n)
            throw domain_error("group table is not square at row " + std::to_string(g));
        for (int64_t h = 0; h < n; ++h) {
            int64_t v = table[static_cast<size_t>(g)][static_cast<size_t>(h)];
            if (v < 0 || v >= n)
                throw domain_error("group table entry out of range at (" +
                                   std::to_string(g) + "," + std::to_string(h) + ")");
        }
    }

    // identity at index 0
    for (int64_t h = 0; h < n; ++h) {
        if (table[0][static_cast<size_t>(h)] != h)
            throw domain_error("identity not at index 0: table[0][" + std::to_string(h) +
                               "] = " + std::to_string(table[0][static_cast<size_t>(h)]));
        if (table[static_cast<size_t>(h)][0] != h)
            throw domain_error("identity not at index 0: table[" + std::to_string(h) +
                               "][0] = " + std::to_string(table[static_cast<size_t>(h)][0]));
    }

    // rows and columns are permutations
    for (int64_t g = 0; g < n; ++g) {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int64_t h = 0; h < n; ++h) {
            int64_t v = table[static_cast<size_t>(g)][static_cast<size_t>(h)];
            if (seen[static_cast<size_t>(v)])
                throw domain_error("row " + std::to_string(g) + " is not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
        std::fill(seen.begin(), seen.end(), false);
        for (int64_t h = 0; h < n; ++h) {
            int64_t v = table[static_cast<size_t>(h)][static_cast<size_t>(g)];
            if (seen[static_cast<size_t>(v)])
                throw domain_error("column " + std::to_string(g) + " is not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }

    // associativity
    for (int64_t g = 0; g < n; ++g)
        for (int64_t h = 0; h < n; ++h)
            for (int64_t k = 0; k < n; ++k) {
                int64_t gh = table[static_cast<size_t>(g)][static_cast<size_t>(h)];
                int64_t hk = table[static_cast<size_t>(h)][static_cast<size_t>(k)];
                if (table[static_cast<size_t>(gh)][static_cast<size_t>(k)] !=
                    table[static_cast<size_t>(g)][static_cast<size_t>(hk)])
                    throw domain_error("associativity fails at (" + std::to_string(g) + "," +
                                       std::to_string(h) + "," + std::to_string(k) + ")");
            }

    FiniteGroup out;
    out.order_ = n;
    out.table_.resize(static_cast<size_t>(n * n));
    for (int64_t g = 0; g < n; ++g)
        for (int64_t h = 0; h < n; ++h)
            out.table_[static_cast<size_t>(g * n + h)] =
                table[static_cast<size_t>(g)][static_cast<size_t>(h)];
    out.inv_.assign(static_cast<size_t>(n), -1);
    for (int64_t g = 0; g < n; ++g)
        for (int64_t h = 0; h < n; ++h)
            if (out.mul(g, h) == 0) out.inv_[static_cast<size_t>(g)] = h;
    if (!names.empty() && static_cast<int64_t>(names.size()) != n)
        throw domain_error("names list does not match group order");
    out.names_ = std::move(names);
    return out;
}

namespace {

FiniteGroup from_mul(int64_t n, auto&& mul, std::vector<std::string> names = {}) {
    std::vector<std::vector<int64_t>> t(static_cast<size_t>(n),
                                        std::vector<int64_t>(static_cast<size_t>(n)));
    for (int64_t g = 0; g < n; ++g)
        for (int64_t h = 0; h < n; ++h)
            t[static_cast<size_t>(g)][static_cast<size_t>(h)] = mul(g, h);
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

} // namespace

FiniteGroup cyclic_group(int64_t n) {
    if (n < 1) throw domain_error("cyclic: order must be positive");
    return from_mul(n, [n](int64_t g, int64_t h) { return (g + h) % n; });
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int64_t a = g.order(), b = h.order();
    return from_mul(a * b, [&](int64_t x, int64_t y) {
        int64_t xa = x / b, xb = x % b, ya = y / b, yb = y % b;
        return g.mul(xa, ya) * b + h.mul(xb, yb);
    });
}

FiniteGroup dihedral_group(int64_t n) {
    if (n < 1) throw domain_error("dihedral: parameter must be positive");
    // 0..n-1: rotations r^k; n..2n-1: reflections s r^k, with r^a s = s r^-a.
    return from_mul(2 * n, [n](int64_t x, int64_t y) {
        bool xf = x >= n, yf = y >= n;
        int64_t xa = xf ? x - n : x, ya = yf ? y - n : y;
        if (!xf && !yf) return (xa + ya) % n;
        if (!xf && yf) return n + ((ya - xa) % n + n) % n;
        if (xf && !yf) return n + (xa + ya) % n;
        return ((ya - xa) % n + n) % n;
    });
}

FiniteGroup quaternion8() {
    // 0..7 = 1, i, j, k, -1, -i, -j, -k
    static const int64_t base[4][4] = {
        // 1    i    j    k      (row * col, sign folded below)
        {0, 1, 2, 3},
        {1, 4, 3, 6}, // i*1=i  i*i=-1  i*j=k  i*k=-j
        {2, 7, 4, 1}, // j*1=j  j*i=-k  j*j=-1 j*k=i
        {3, 2, 5, 4}, // k*1=k  k*i=j   k*j=-i k*k=-1
    };
    return from_mul(8, [](int64_t x, int64_t y) {
        int64_t sx = x / 4, sy = y / 4;
        int64_t p = base[x % 4][y % 4];
        int64_t sign = (sx + sy + p / 4) % 2;
        return (p % 4) + 4 * sign;
    }, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

FiniteGroup symmetric_group(int64_t n) {
    if (n < 1 || n > 5) throw domain_error("symmetric: parameter must be in 1..5");
    std::vector<std::vector<int64_t>> perms;
    std::vector<int64_t> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int64_t ord = static_cast<int64_t>(perms.size());
    auto index_of = [&](const std::vector<int64_t>& q) {
        auto it = std::lower_bound(perms.begin(), perms.end(), q);
        return static_cast<int64_t>(it - perms.begin());
    };
    return from_mul(ord, [&](int64_t x, int64_t y) {
        std::vector<int64_t> c(static_cast<size_t>(n));
        for (int64_t i = 0; i < n; ++i)
            c[static_cast<size_t>(i)] =
                perms[static_cast<size_t>(x)][static_cast<size_t>(
                    perms[static_cast<size_t>(y)][static_cast<size_t>(i)])];
        return index_of(c);
    });
}

namespace {

FiniteGroup parse_spec(const std::string& spec, size_t& pos);

int64_t parse_param(const std::string& spec, size_t& pos) {
    if (pos >= spec.size() || spec[pos] != ':')
        throw domain_error("preset spec: expected ':<param>' in '" + spec + "'");
    ++pos;
    size_t start = pos;
    while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9') ++pos;
    if (pos == start) throw domain_error("preset spec: missing numeric parameter");
    return std::stoll(spec.substr(start, pos - start));
}

FiniteGroup parse_spec(const std::string& spec, size_t& pos) {
    size_t start = pos;
    while (pos < spec.size() && (std::isalnum(static_cast<unsigned char>(spec[pos])) || spec[pos] == '_'))
        ++pos;
    std::string name = spec.substr(start, pos - start);
    if (name == "cyclic") return cyclic_group(parse_param(spec, pos));
    if (name == "dihedral") return dihedral_group(parse_param(spec, pos));
    if (name == "symmetric") return symmetric_group(parse_param(spec, pos));
    if (name == "quaternion8") return quaternion8();
    if (name == "klein4") return direct_product(cyclic_group(2), cyclic_group(2));
    if (name == "trivial") return cyclic_group(1);
    if (name == "product") {
        if (pos >= spec.size() || spec[pos] != '(')
            throw domain_error("preset spec: product expects '(a,b)'");
        ++pos;
        FiniteGroup a = parse_spec(spec, pos);
        if (pos >= spec.size() || spec[pos] != ',')
            throw domain_error("preset spec: product expects two factors");
        ++pos;
        FiniteGroup b = parse_spec(spec, pos);
        if (pos >= spec.size() || spec[pos] != ')')
            throw domain_error("preset spec: unbalanced parentheses");
        ++pos;
        return direct_product(a, b);
    }
    throw domain_error("unknown preset family '" + name + "'");
}

} // namespace

FiniteGroup preset_group(const std::string& spec, int64_t max_order) {
    size_t pos = 0;
    FiniteGroup g = parse_spec(spec, pos);
    if (pos != spec.size())
        throw domain_error("preset spec: trailing characters in '" + spec + "'");
    if (max_order > 0 && g.order() > max_order)
        throw resource_error("preset group order " + std::to_string(g.order()) +
                             " exceeds the cap of " + std::to_string(max_order));
    return g;
}

int64_t element_order(const FiniteGroup& g, int64_t elem) {
    if (elem < 0 || elem >= g.order())
        throw domain_error("element index out of range");
    int64_t k = 1, cur = elem;
    while (cur != 0) {
        cur = g.mul(cur, elem);
        ++k;
    }
    return k;
}

std::vector<int64_t> center(const FiniteGroup& g) {
    std::vector<int64_t> out;
    for (int64_t x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int64_t h = 0; h < g.order() && central; ++h)
            central = g.mul(x, h) == g.mul(h, x);
        if (central) out.push_back(x);
    }
    return out;
}

GroupHom GroupHom::checked(const FiniteGroup& src, const FiniteGroup& dst,
                           std::vector<int64_t> map) {
    if (static_cast<int64_t>(map.size()) != src.order())
        throw domain_error("homomorphism map length does not match source order");
    for (int64_t v : map)
        if (v < 0 || v >= dst.order()) throw domain_error("homomorphism value out of range");
    if (map[0] != 0) throw domain_error("homomorphism does not fix the identity");
    for (int64_t g = 0; g < src.order(); ++g)
        for (int64_t h = 0; h < src.order(); ++h)
            if (map[static_cast<size_t>(src.mul(g, h))] !=
                dst.mul(map[static_cast<size_t>(g)], map[static_cast<size_t>(h)]))
                throw domain_error("map is not a homomorphism at (" + std::to_string(g) + "," +
                                   std::to_string(h) + ")");
    return GroupHom{src.order(), dst.order(), std::move(map)};
}

namespace {

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, std::vector<int64_t>& map,
                std::vector<bool>& used, int64_t next) {
    const int64_t n = a.order();
    if (next == n) return true;
    for (int64_t cand = 0; cand < n; ++cand) {
        if (used[static_cast<size_t>(cand)]) continue;
        if (element_order(a, next) != element_order(b, cand)) continue;
        map[static_cast<size_t>(next)] = cand;
        bool ok = true;
        for (int64_t g = 0; g <= next && ok; ++g) {
            for (int64_t h = 0; h <= next && ok; ++h) {
                int64_t p = a.mul(g, h);
                if (p > next) continue;
                if (map[static_cast<size_t>(p)] !=
                    b.mul(map[static_cast<size_t>(g)], map[static_cast<size_t>(h)]))
                    ok = false;
            }
        }
        if (ok) {
            used[static_cast<size_t>(cand)] = true;
            if (extend_iso(a, b, map, used, next + 1)) return true;
            used[static_cast<size_t>(cand)] = false;
        }
    }
    map[static_cast<size_t>(next)] = -1;
    return false;
}

} // namespace

bool is_isomorphic_bruteforce(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    if (a.order() > 8)
        throw domain_error("brute-force isomorphism search is limited to order <= 8");
    std::vector<int64_t> map(static_cast<size_t>(a.order()), -1);
    std::vector<bool> used(static_cast<size_t>(a.order()), false);
    map[0] = 0;
    used[0] = true;
    return extend_iso(a, b, map, used, 1);
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<int64_t>& perm) {
    const int64_t n = g.order();
    if (static_cast<int64_t>(perm.size()) != n || perm[0] != 0)
        throw domain_error("relabel: permutation must fix index 0");
    std::vector<std::vector<int64_t>> t(static_cast<size_t>(n),
                                        std::vector<int64_t>(static_cast<size_t>(n)));
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b)
            t[static_cast<size_t>(perm[static_cast<size_t>(a)])]
             [static_cast<size_t>(perm[static_cast<size_t>(b)])] =
                perm[static_cast<size_t>(g.mul(a, b))];
    return FiniteGroup::from_table(std::move(t));
}

} // namespace projcoh
