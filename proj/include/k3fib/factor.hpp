#pragma once

/// Factorization of univariate polynomials over Q.
///
/// Pipeline: rational content extraction -> Yun squarefree decomposition ->
/// monicizing substitution t -> t/lc -> Zassenhaus on monic integer
/// polynomials (Berlekamp mod p, quadratic Hensel lifting to above the
/// Mignotte bound, subset recombination). Everything is deterministic.
///
/// Input degrees in this library are small (places of a rational function),
/// so the subset search is never a concern.

#include "k3fib/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace k3fib {

namespace detail {

// ---- arithmetic in F_p[x], p a small prime, coefficients ascending ----

using PolyP = std::vector<std::int64_t>;

inline void trim_p(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

inline PolyP mul_p(const PolyP& a, const PolyP& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim_p(c);
    return c;
}

inline PolyP sub_p(PolyP a, const PolyP& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim_p(a);
    return a;
}

inline PolyP monic_p(PolyP a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t s = inv_mod(a.back(), p);
    for (auto& c : a) c = c * s % p;
    return a;
}

inline std::pair<PolyP, PolyP> divmod_p(PolyP a, const PolyP& b, std::int64_t p) {
    PolyP q;
    if (b.empty()) throw std::domain_error("mod-p division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    std::int64_t binv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        std::int64_t c = a.back() * binv % p;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        trim_p(a);
    }
    return {q, a};
}

inline PolyP mod_p(const PolyP& a, const PolyP& b, std::int64_t p) { return divmod_p(a, b, p).second; }

inline PolyP gcd_p(PolyP a, PolyP b, std::int64_t p) {
    while (!b.empty()) {
        PolyP r = mod_p(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic_p(a, p);
}

/// Extended gcd: returns (s, t) with s*a + t*b = 1; requires gcd = 1.
inline std::pair<PolyP, PolyP> xgcd_p(const PolyP& a, const PolyP& b, std::int64_t p) {
    PolyP r0 = a, r1 = b;
    PolyP s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = divmod_p(r0, r1, p);
        PolyP ns = sub_p(s0, mul_p(q, s1, p), p);
        PolyP nt = sub_p(t0, mul_p(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(ns);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    if (r0.size() != 1) throw std::domain_error("xgcd: inputs not coprime mod p");
    std::int64_t s = inv_mod(r0[0], p);
    for (auto& c : s0) c = c * s % p;
    for (auto& c : t0) c = c * s % p;
    return {s0, t0};
}

inline PolyP powmod_p(PolyP base, Int e, const PolyP& m, std::int64_t p) {
    PolyP r = {1};
    base = mod_p(base, m, p);
    while (e > 0) {
        if ((e & 1) != 0) r = mod_p(mul_p(r, base, p), m, p);
        base = mod_p(mul_p(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

/// Berlekamp factorization of a monic squarefree polynomial mod p.
inline std::vector<PolyP> berlekamp(const PolyP& f, std::int64_t p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    // Petr-Berlekamp matrix: row i = coefficients of x^(p*i) mod f.
    std::vector<std::vector<std::int64_t>> Q(static_cast<std::size_t>(n),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    PolyP xp = powmod_p({0, 1}, Int(p), f, p);
    PolyP cur = {1};
    for (int i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) Q[static_cast<std::size_t>(i)][j] = cur[j];
        cur = mod_p(mul_p(cur, xp, p), f, p);
    }
    // Nullspace of (Q - I)^T, i.e. vectors v with v*Q = v.
    std::vector<std::vector<std::int64_t>> M(static_cast<std::size_t>(n),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % p;
            if (i == j) v = (v - 1 + p) % p;
            M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;  // transpose
        }
    // Gaussian elimination; record pivot columns to read the nullspace.
    std::vector<int> pivot_of_row;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(M[static_cast<std::size_t>(pr)], M[static_cast<std::size_t>(row)]);
        std::int64_t inv = inv_mod(M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], p);
        for (int c = 0; c < n; ++c)
            M[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
                M[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            std::int64_t m = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (m == 0) continue;
            for (int c = 0; c < n; ++c)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    ((M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                      m * M[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]) % p + p) % p;
        }
        pivot_of_row.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<PolyP> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        PolyP v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < static_cast<int>(pivot_of_row.size()); ++r) {
            std::int64_t val = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            v[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(r)])] = (p - val) % p;
        }
        trim_p(v);
        basis.push_back(std::move(v));
    }

    // Number of irreducible factors equals the nullity (the constant vector
    // is part of the basis).
    const std::size_t nfactors = basis.size();
    std::vector<PolyP> factors = {f};
    for (const PolyP& v : basis) {
        if (factors.size() == nfactors) break;
        if (v.size() <= 1) continue;  // constant vector splits nothing
        std::vector<PolyP> next;
        for (const PolyP& w : factors) {
            if (w.size() <= 2) {
                next.push_back(w);
                continue;
            }
            PolyP rem = w;
            std::vector<PolyP> parts;
            for (std::int64_t c = 0; c < p && rem.size() > 2; ++c) {
                PolyP shifted = v;
                shifted[0] = ((shifted[0] - c) % p + p) % p;
                trim_p(shifted);
                if (shifted.empty()) continue;
                PolyP g = gcd_p(rem, shifted, p);
                if (g.size() > 1 && g.size() < rem.size()) {
                    parts.push_back(g);
                    rem = monic_p(divmod_p(rem, g, p).first, p);
                }
            }
            if (rem.size() > 1) parts.push_back(rem);
            for (auto& g : parts) next.push_back(monic_p(g, p));
        }
        factors = std::move(next);
    }
    return factors;
}

// ---- Z[x] helpers for the lifting stage (ascending coefficient order) ----

using PolyZ = std::vector<Int>;

inline void trim_z(PolyZ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Int mod_sym(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

inline PolyZ reduce_sym(PolyZ a, const Int& m) {
    for (auto& c : a) c = mod_sym(c, m);
    trim_z(a);
    return a;
}

inline PolyZ mul_z(const PolyZ& a, const PolyZ& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    PolyZ c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return reduce_sym(c, m);
}

inline PolyZ add_z(PolyZ a, const PolyZ& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return reduce_sym(a, m);
}

inline PolyZ sub_z(PolyZ a, const PolyZ& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return reduce_sym(a, m);
}

inline Int inv_mod_int(const Int& a, const Int& m) {
    Int t = 0, nt = 1, r = m, nr = a % m;
    if (nr < 0) nr += m;
    while (nr != 0) {
        Int q = r / nr;
        Int tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod_int: not invertible");
    return t < 0 ? t + m : t;
}

/// Division with b monic mod m; exact in (Z/m)[x].
inline std::pair<PolyZ, PolyZ> divmod_z_monic(PolyZ a, const PolyZ& b, const Int& m) {
    PolyZ q;
    a = reduce_sym(a, m);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Int c = a.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_sym(a[shift + i] - c * b[i], m);
        trim_z(a);
        if (a.size() < b.size()) break;
    }
    return {reduce_sym(q, m), a};
}

struct HenselPair {
    PolyZ g, h, s, t;
};

/// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
/// to the same congruences mod m^2. g and h stay monic.
inline HenselPair hensel_step(const PolyZ& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    PolyZ e = sub_z(f, mul_z(in.g, in.h, m2), m2);
    auto [q, r] = divmod_z_monic(mul_z(in.s, e, m2), in.h, m2);
    PolyZ g2 = add_z(in.g, add_z(mul_z(in.t, e, m2), mul_z(q, in.g, m2), m2), m2);
    PolyZ h2 = add_z(in.h, r, m2);
    if (g2.size() != in.g.size() || g2.back() != 1 || h2.size() != in.h.size() || h2.back() != 1)
        throw std::runtime_error("hensel_step: lost monic normalization");
    PolyZ b = sub_z(add_z(mul_z(in.s, g2, m2), mul_z(in.t, h2, m2), m2), PolyZ{1}, m2);
    auto [c, d] = divmod_z_monic(mul_z(in.s, b, m2), h2, m2);
    PolyZ s2 = sub_z(in.s, d, m2);
    PolyZ t2 = sub_z(in.t, add_z(mul_z(in.t, b, m2), mul_z(c, g2, m2), m2), m2);
    return {g2, h2, s2, t2};
}

/// Lift the monic factorization f = prod(factors) (mod p) to mod p^2^k >= bound.
inline std::vector<PolyZ> hensel_lift_tree(const PolyZ& f, std::vector<PolyP> factors, std::int64_t p,
                                           const Int& bound, Int& modulus_out) {
    Int m(p);
    while (m < bound) m *= m;  // final modulus, power tower of p
    modulus_out = m;            // not literally p^2^k; recompute below

    // We lift pairwise along a binary split of the factor list.
    struct Frame {
        PolyZ f;
        std::vector<PolyP> facs;
    };
    std::vector<PolyZ> out;

    // recursive lambda
    auto to_z = [](const PolyP& a) {
        PolyZ r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
        return r;
    };

    std::function<void(const PolyZ&, const std::vector<PolyP>&)> rec =
        [&](const PolyZ& fz, const std::vector<PolyP>& facs) {
            if (facs.size() == 1) {
                out.push_back(fz);
                return;
            }
            std::size_t half = facs.size() / 2;
            PolyP gp = {1}, hp = {1};
            for (std::size_t i = 0; i < half; ++i) gp = mul_p(gp, facs[i], p);
            for (std::size_t i = half; i < facs.size(); ++i) hp = mul_p(hp, facs[i], p);
            auto [sp, tp] = xgcd_p(gp, hp, p);
            HenselPair pair{to_z(gp), to_z(hp), to_z(sp), to_z(tp)};
            Int mm(p);
            while (mm < bound) {
                pair = hensel_step(fz, pair, mm);
                mm *= mm;
            }
            rec(reduce_sym(pair.g, mm), std::vector<PolyP>(facs.begin(), facs.begin() + static_cast<long>(half)));
            rec(reduce_sym(pair.h, mm), std::vector<PolyP>(facs.begin() + static_cast<long>(half), facs.end()));
            modulus_out = mm;
        };
    rec(f, factors);
    return out;
}

inline Int max_abs_coeff(const PolyZ& f) {
    Int m(0);
    for (const auto& c : f) m = std::max(m, abs_int(c));
    return m;
}

inline Int isqrt_ceil(const Int& n) {
    Int x = 1;
    while (x * x < n) x <<= 1;
    Int lo = x >> 1, hi = x;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid >= n) hi = mid;
        else lo = mid + 1;
    }
    return hi;
}

inline bool divides_z(const PolyZ& d, const PolyZ& f) {
    // exact division test in Z[x], d monic
    PolyZ r = f;
    while (r.size() >= d.size() && !r.empty()) {
        std::size_t shift = r.size() - d.size();
        Int c = r.back();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        trim_z(r);
        if (!r.empty() && r.size() < d.size()) return false;
    }
    return r.empty();
}

inline PolyZ div_exact_z(const PolyZ& f, const PolyZ& d) {
    PolyZ r = f, q(f.size() - d.size() + 1, Int(0));
    while (r.size() >= d.size() && !r.empty()) {
        std::size_t shift = r.size() - d.size();
        Int c = r.back();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        trim_z(r);
    }
    return q;
}

/// Zassenhaus: factor a monic squarefree integer polynomial into monic
/// irreducibles over Z.
inline std::vector<PolyZ> zassenhaus_monic(const PolyZ& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    static const std::int64_t primes[] = {3,    5,    7,    11,   13,   17,   19,  23,  29,  31,  37,
                                          41,   43,   47,   53,   59,   61,   67,  71,  73,  79,  83,
                                          89,   97,   101,  103,  107,  109,  113, 127, 131, 137, 139,
                                          149,  151,  157,  163,  167,  173,  179, 181, 191, 193, 197,
                                          199,  211,  223,  227,  229,  233,  239, 241, 251, 257, 263};
    std::int64_t p = 0;
    std::vector<PolyP> modular;
    for (std::int64_t cand : primes) {
        PolyP fp(f.size());
        bool lc_ok = true;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Int c = f[i] % cand;
            if (c < 0) c += cand;
            fp[i] = static_cast<std::int64_t>(c);
        }
        if (fp.back() == 0) lc_ok = false;  // cannot happen for monic f, kept for clarity
        if (!lc_ok) continue;
        // squarefree mod p?
        PolyP d(fp.size() - 1);
        for (std::size_t i = 1; i < fp.size(); ++i) d[i - 1] = (fp[i] * static_cast<std::int64_t>(i % cand)) % cand;
        trim_p(d);
        if (d.empty()) continue;
        if (gcd_p(fp, d, cand).size() != 1) continue;
        p = cand;
        modular = berlekamp(fp, p);
        break;
    }
    if (p == 0) throw std::runtime_error("zassenhaus: no suitable prime found");
    if (modular.size() == 1) return {f};

    std::sort(modular.begin(), modular.end());

    // Landau-Mignotte bound on the coefficients of any monic factor.
    Int B = isqrt_ceil(Int(n + 1)) * pow_int(Int(2), static_cast<unsigned>(n)) * max_abs_coeff(f);
    Int bound = 2 * B + 1;

    Int modulus(1);
    std::vector<PolyZ> lifted = hensel_lift_tree(f, modular, p, bound, modulus);

    // Subset recombination.
    std::vector<PolyZ> result;
    std::vector<int> live(lifted.size());
    std::iota(live.begin(), live.end(), 0);
    PolyZ rem = f;

    auto product_mod = [&](const std::vector<int>& subset) {
        PolyZ prod = {1};
        for (int idx : subset) prod = mul_z(prod, lifted[static_cast<std::size_t>(idx)], modulus);
        return prod;
    };

    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool found = true;
        while (found && 2 * s <= live.size()) {
            found = false;
            std::vector<int> comb(s);
            std::iota(comb.begin(), comb.end(), 0);
            for (;;) {
                std::vector<int> subset(s);
                for (std::size_t i = 0; i < s; ++i) subset[i] = live[static_cast<std::size_t>(comb[i])];
                PolyZ cand = product_mod(subset);
                if (max_abs_coeff(cand) <= B && divides_z(cand, rem)) {
                    result.push_back(cand);
                    rem = div_exact_z(rem, cand);
                    std::vector<int> nl;
                    for (std::size_t i = 0, j = 0; i < live.size(); ++i) {
                        if (j < s && static_cast<int>(i) == comb[j]) { ++j; continue; }
                        nl.push_back(live[i]);
                    }
                    live = std::move(nl);
                    found = true;
                    break;
                }
                // next combination
                int i = static_cast<int>(s) - 1;
                while (i >= 0 && comb[static_cast<std::size_t>(i)] ==
                                     static_cast<int>(live.size()) - static_cast<int>(s) + i)
                    --i;
                if (i < 0) break;
                ++comb[static_cast<std::size_t>(i)];
                for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j)
                    comb[j] = comb[j - 1] + 1;
            }
        }
        ++s;
    }
    if (rem.size() > 1) result.push_back(rem);
    return result;
}

}  // namespace detail

/// factor_squarefree: complete factorization over Q.
///
/// Returns the list of (monic irreducible polynomial, multiplicity), sorted
/// by (degree, coefficients); the product of factors^multiplicities equals
/// the input up to a nonzero rational constant.
inline std::vector<std::pair<Polynomial, int>> factor_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    if (f.degree() == 0) return {};

    // Yun's squarefree decomposition over Q.
    std::vector<std::pair<Polynomial, int>> squarefree_parts;
    {
        Polynomial a = f.monic();
        Polynomial d = a.derivative();
        Polynomial g = gcd(a, d);
        Polynomial b = a / g;
        Polynomial c = d / g;
        int i = 1;
        for (;;) {
            Polynomial h = c - b.derivative();
            if (h.is_zero()) {
                if (b.degree() > 0) squarefree_parts.emplace_back(b, i);
                break;
            }
            Polynomial q = gcd(b, h);
            if (q.degree() > 0) squarefree_parts.emplace_back(q, i);
            b = b / q;
            c = h / q;
            ++i;
            if (b.degree() == 0) break;
        }
    }

    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& [part, mult] : squarefree_parts) {
        auto [content, zcoeffs] = part.content_primitive();
        (void)content;
        // Monicize: G(y) = lc^(n-1) * part(y / lc) has integer coefficients.
        Int lc = zcoeffs.back();
        detail::PolyZ G(zcoeffs.size());
        const int n = static_cast<int>(zcoeffs.size()) - 1;
        for (int i = 0; i <= n; ++i)
            G[static_cast<std::size_t>(i)] =
                zcoeffs[static_cast<std::size_t>(i)] * pow_int(lc, static_cast<unsigned>(n - 1 - i >= 0 ? n - 1 - i : 0));
        // degree-n coefficient: lc * lc^(-1) = 1
        G[static_cast<std::size_t>(n)] = 1;

        for (const detail::PolyZ& H : detail::zassenhaus_monic(G)) {
            // Pull back y = lc * t and renormalize to a monic factor over Q.
            std::vector<Rat> c(H.size());
            for (std::size_t i = 0; i < H.size(); ++i) c[i] = Rat(H[i]) * pow_rat(Rat(lc), static_cast<int>(i));
            out.emplace_back(Polynomial(std::move(c)).monic(), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

}  // namespace k3fib
