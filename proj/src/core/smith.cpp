#include "core/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include <gmpxx.h>

namespace projcoh {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw internal_error("integer overflow in lattice arithmetic (add)");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw internal_error("integer overflow in lattice arithmetic (sub)");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw internal_error("integer overflow in lattice arithmetic (mul)");
    return r;
}

int64_t mod_floor(int64_t a, int64_t m) {
    if (m < 1) throw internal_error("mod_floor: modulus must be >= 1");
    int64_t r = a % m;
    if (r < 0) r += m;
    return r;
}

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b < 0) --q;
    return q;
}

int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd64(a, b), b < 0 ? -b : b);
}

int64_t ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    int64_t old_r = a, r = b;
    int64_t old_x = 1, xx = 0;
    int64_t old_y = 0, yy = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

IntMat IntMat::identity(int64_t n) {
    IntMat m(n, n);
    for (int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<int64_t> IntMat::mul_vec(const std::vector<int64_t>& v) const {
    if (static_cast<int64_t>(v.size()) != cols)
        throw internal_error("mul_vec: dimension mismatch");
    std::vector<int64_t> out(static_cast<size_t>(rows), 0);
    for (int64_t r = 0; r < rows; ++r) {
        int64_t acc = 0;
        for (int64_t c = 0; c < cols; ++c)
            acc = checked_add(acc, checked_mul(at(r, c), v[static_cast<size_t>(c)]));
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

namespace {

// Exact bignum matrix for the normal-form computation; entry growth during
// elimination is unbounded in general, so the work happens in mpz and the
// results are narrowed back to int64 at the end.
struct ZMat {
    int64_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    ZMat() = default;
    ZMat(int64_t r, int64_t c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}

    mpz_class& at(int64_t r, int64_t c) { return a[static_cast<size_t>(r * cols + c)]; }
    const mpz_class& at(int64_t r, int64_t c) const {
        return a[static_cast<size_t>(r * cols + c)];
    }

    static ZMat identity(int64_t n) {
        ZMat m(n, n);
        for (int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

ZMat widen(const IntMat& m) {
    ZMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i];
    return out;
}

IntMat narrow(const ZMat& m, const char* what) {
    IntMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) {
        if (!m.a[i].fits_slong_p())
            throw internal_error(std::string("normal-form transform entry exceeds int64 in ") +
                                 what);
        out.a[i] = m.a[i].get_si();
    }
    return out;
}

struct SnfWork {
    ZMat& A;
    ZMat U, Uinv, V, Vinv;
    bool want_u, want_v;

    void row_addmul(int64_t i, int64_t j, const mpz_class& k) { // row_i += k * row_j
        if (k == 0) return;
        for (int64_t c = 0; c < A.cols; ++c) A.at(i, c) += k * A.at(j, c);
        if (want_u) {
            for (int64_t c = 0; c < U.cols; ++c) U.at(i, c) += k * U.at(j, c);
            for (int64_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) -= k * Uinv.at(r, i);
        }
    }

    void col_addmul(int64_t i, int64_t j, const mpz_class& k) { // col_i += k * col_j
        if (k == 0) return;
        for (int64_t r = 0; r < A.rows; ++r) A.at(r, i) += k * A.at(r, j);
        if (want_v) {
            for (int64_t r = 0; r < V.rows; ++r) V.at(r, i) += k * V.at(r, j);
            for (int64_t c = 0; c < Vinv.cols; ++c) Vinv.at(j, c) -= k * Vinv.at(i, c);
        }
    }

    void row_swap(int64_t i, int64_t j) {
        if (i == j) return;
        for (int64_t c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
        if (want_u) {
            for (int64_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
            for (int64_t r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
        }
    }

    void col_swap(int64_t i, int64_t j) {
        if (i == j) return;
        for (int64_t r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        if (want_v) {
            for (int64_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
            for (int64_t c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
        }
    }

    void row_negate(int64_t i) {
        for (int64_t c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
        if (want_u) {
            for (int64_t c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
            for (int64_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
        }
    }

    // Unimodular 2x2 transform [[u, v], [mg, ag]] on rows (t, i); puts
    // gcd(A[t][t], A[i][t]) at the pivot and zeroes A[i][t] in one step.
    void row_gcd_transform(int64_t t, int64_t i, const mpz_class& u, const mpz_class& v,
                           const mpz_class& mg, const mpz_class& ag) {
        mpz_class x, y;
        for (int64_t c = 0; c < A.cols; ++c) {
            x = u * A.at(t, c) + v * A.at(i, c);
            y = mg * A.at(t, c) + ag * A.at(i, c);
            A.at(t, c) = x;
            A.at(i, c) = y;
        }
        if (want_u) {
            for (int64_t c = 0; c < U.cols; ++c) {
                x = u * U.at(t, c) + v * U.at(i, c);
                y = mg * U.at(t, c) + ag * U.at(i, c);
                U.at(t, c) = x;
                U.at(i, c) = y;
            }
            // right-multiply the inverse by [[ag, -v], [-mg, u]]
            for (int64_t r = 0; r < Uinv.rows; ++r) {
                x = ag * Uinv.at(r, t) - mg * Uinv.at(r, i);
                y = -v * Uinv.at(r, t) + u * Uinv.at(r, i);
                Uinv.at(r, t) = x;
                Uinv.at(r, i) = y;
            }
        }
    }

    // Same transform on columns (t, j).
    void col_gcd_transform(int64_t t, int64_t j, const mpz_class& u, const mpz_class& v,
                           const mpz_class& mg, const mpz_class& ag) {
        mpz_class x, y;
        for (int64_t r = 0; r < A.rows; ++r) {
            x = u * A.at(r, t) + v * A.at(r, j);
            y = mg * A.at(r, t) + ag * A.at(r, j);
            A.at(r, t) = x;
            A.at(r, j) = y;
        }
        if (want_v) {
            for (int64_t r = 0; r < V.rows; ++r) {
                x = u * V.at(r, t) + v * V.at(r, j);
                y = mg * V.at(r, t) + ag * V.at(r, j);
                V.at(r, t) = x;
                V.at(r, j) = y;
            }
            for (int64_t c = 0; c < Vinv.cols; ++c) {
                x = ag * Vinv.at(t, c) - mg * Vinv.at(j, c);
                y = -v * Vinv.at(t, c) + u * Vinv.at(j, c);
                Vinv.at(t, c) = x;
                Vinv.at(j, c) = y;
            }
        }
    }
};

} // namespace

SmithResult smith_normal_form(IntMat A0, bool want_u, bool want_v) {
    ZMat A = widen(A0);
    const int64_t R = A.rows, C = A.cols;
    const int64_t n = std::min(R, C);
    SnfWork w{A, {}, {}, {}, {}, want_u, want_v};
    if (want_u) {
        w.U = ZMat::identity(R);
        w.Uinv = ZMat::identity(R);
    }
    if (want_v) {
        w.V = ZMat::identity(C);
        w.Vinv = ZMat::identity(C);
    }

    mpz_class q;
    int64_t t = 0;
    while (t < n) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot;
        // re-selected every round to keep coefficient growth in check.
        int64_t pi = -1, pj = -1;
        mpz_class best;
        for (int64_t i = t; i < R; ++i)
            for (int64_t j = t; j < C; ++j) {
                const mpz_class& v = A.at(i, j);
                if (v == 0) continue;
                mpz_class av = abs(v);
                if (pi < 0 || av < best) {
                    pi = i;
                    pj = j;
                    best = av;
                    if (best == 1) goto found;
                }
            }
        if (pi < 0) break; // trailing submatrix is zero
    found:
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        if (A.at(t, t) < 0) w.row_negate(t);

        // Clear column t and row t. Exact divisions never disturb the other
        // cleared half; a gcd transform shrinks the pivot, which can happen
        // only finitely often, so the loop terminates quickly.
        for (;;) {
            bool pivot_shrunk = false;
            for (int64_t i = t + 1; i < R; ++i) {
                if (A.at(i, t) == 0) continue;
                if (mpz_divisible_p(A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t())) {
                    q = A.at(i, t) / A.at(t, t);
                    w.row_addmul(i, t, -q);
                } else {
                    mpz_class g, u, v;
                    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                               A.at(t, t).get_mpz_t(), A.at(i, t).get_mpz_t());
                    mpz_class ag = A.at(t, t) / g, mg = -A.at(i, t) / g;
                    w.row_gcd_transform(t, i, u, v, mg, ag);
                    pivot_shrunk = true;
                }
            }
            for (int64_t j = t + 1; j < C; ++j) {
                if (A.at(t, j) == 0) continue;
                if (mpz_divisible_p(A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t())) {
                    q = A.at(t, j) / A.at(t, t);
                    w.col_addmul(j, t, -q);
                } else {
                    mpz_class g, u, v;
                    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                               A.at(t, t).get_mpz_t(), A.at(t, j).get_mpz_t());
                    mpz_class ag = A.at(t, t) / g, mg = -A.at(t, j) / g;
                    w.col_gcd_transform(t, j, u, v, mg, ag);
                    pivot_shrunk = true;
                }
            }
            if (A.at(t, t) < 0) w.row_negate(t);
            if (!pivot_shrunk) break;
        }

        // Canonical chain: the pivot must divide the whole trailing block.
        int64_t bad_i = -1;
        for (int64_t i = t + 1; i < R && bad_i < 0; ++i)
            for (int64_t j = t + 1; j < C; ++j)
                if (!mpz_divisible_p(A.at(i, j).get_mpz_t(), A.at(t, t).get_mpz_t())) {
                    bad_i = i;
                    break;
                }
        if (bad_i >= 0) {
            w.row_addmul(t, bad_i, 1);
            continue; // redo elimination at the same t with a smaller gcd
        }
        ++t;
    }

    SmithResult res;
    res.diag.resize(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        if (!A.at(i, i).fits_slong_p())
            throw internal_error("normal-form diagonal entry exceeds int64");
        res.diag[static_cast<size_t>(i)] = A.at(i, i).get_si();
    }
    if (want_u) {
        res.U = narrow(w.U, "U");
        res.Uinv = narrow(w.Uinv, "Uinv");
    }
    if (want_v) {
        res.V = narrow(w.V, "V");
        res.Vinv = narrow(w.Vinv, "Vinv");
    }
    return res;
}

std::optional<std::vector<int64_t>> solve_integer(const IntMat& A,
                                                  const std::vector<int64_t>& b) {
    if (static_cast<int64_t>(b.size()) != A.rows)
        throw internal_error("solve_integer: dimension mismatch");
    SmithResult s = smith_normal_form(A, true, true);
    std::vector<int64_t> c = s.U.mul_vec(b);
    std::vector<int64_t> y(static_cast<size_t>(A.cols), 0);
    const int64_t n = std::min(A.rows, A.cols);
    for (int64_t i = 0; i < A.rows; ++i) {
        int64_t d = i < n ? s.diag[static_cast<size_t>(i)] : 0;
        int64_t ci = c[static_cast<size_t>(i)];
        if (d == 0) {
            if (ci != 0) return std::nullopt;
        } else {
            if (ci % d != 0) return std::nullopt;
            y[static_cast<size_t>(i)] = ci / d;
        }
    }
    std::vector<int64_t> x = s.V.mul_vec(y);
    if (A.mul_vec(x) != b)
        throw internal_error("solve_integer: verification failed");
    return x;
}

} // namespace projcoh
