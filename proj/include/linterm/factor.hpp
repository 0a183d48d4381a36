#ifndef LINTERM_FACTOR_HPP
#define LINTERM_FACTOR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

// Irreducible factorization over Q for the small degrees this library meets
// (characteristic polynomials, degree <= 8 or so). The pipeline is the
// classical one: reduce to a monic squarefree integer polynomial, factor it
// modulo a small prime with Berlekamp's algorithm, Hensel-lift the modular
// factors past the Mignotte coefficient bound, and recombine subsets by trial
// division. Everything is exact; no randomization.

namespace linterm {
namespace detail {

// --- integer polynomials: coefficients lowest degree first, no trailing zeros

using ZPoly = std::vector<mpz_class>;

inline void znorm(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    znorm(out);
    return out;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    znorm(out);
    return out;
}

// Long division by a monic divisor stays in Z[x]. Returns {quotient, remainder}.
inline std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& d) {
    ZPoly rem = a, q;
    if (zdeg(rem) >= zdeg(d)) q.assign(static_cast<size_t>(zdeg(rem) - zdeg(d)) + 1, mpz_class(0));
    while (zdeg(rem) >= zdeg(d)) {
        int k = zdeg(rem) - zdeg(d);
        mpz_class f = rem.back();
        q[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= zdeg(d); ++i) rem[static_cast<size_t>(i + k)] -= f * d[static_cast<size_t>(i)];
        znorm(rem);
    }
    return {q, rem};
}

inline mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline ZPoly zreduce(const ZPoly& a, const mpz_class& m) {
    ZPoly out = a;
    for (auto& c : out) c = mod_floor(c, m);
    znorm(out);
    return out;
}

// --- F_p[x] with word-sized p

using MPoly = std::vector<long>;  // coefficients in [0, p)

inline void mnorm(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

inline long inv_mod(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    return ((t % p) + p) % p;
}

inline MPoly mp_from_z(const ZPoly& a, long p) {
    MPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_class r = mod_floor(a[i], mpz_class(p));
        out[i] = r.get_si();
    }
    mnorm(out);
    return out;
}

inline MPoly mp_mul(const MPoly& a, const MPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    MPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    mnorm(out);
    return out;
}

inline MPoly mp_sub(const MPoly& a, const MPoly& b, long p) {
    MPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = ((out[i] - b[i]) % p + p) % p;
    mnorm(out);
    return out;
}

inline std::pair<MPoly, MPoly> mp_divmod(const MPoly& a, const MPoly& d, long p) {
    MPoly rem = a, q;
    if (mdeg(rem) >= mdeg(d)) q.assign(static_cast<size_t>(mdeg(rem) - mdeg(d)) + 1, 0);
    long lead_inv = inv_mod(d.back(), p);
    while (mdeg(rem) >= mdeg(d)) {
        int k = mdeg(rem) - mdeg(d);
        long f = (rem.back() * lead_inv) % p;
        q[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= mdeg(d); ++i) {
            size_t idx = static_cast<size_t>(i + k);
            rem[idx] = ((rem[idx] - f * d[static_cast<size_t>(i)]) % p + p) % p;
        }
        mnorm(rem);
    }
    return {q, rem};
}

inline MPoly mp_mod(const MPoly& a, const MPoly& d, long p) { return mp_divmod(a, d, p).second; }

inline MPoly mp_monic(const MPoly& a, long p) {
    MPoly out = a;
    long s = inv_mod(out.back(), p);
    for (auto& c : out) c = (c * s) % p;
    return out;
}

inline MPoly mp_gcd(MPoly a, MPoly b, long p) {
    while (!b.empty()) {
        MPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = mp_monic(a, p);
    return a;
}

inline MPoly mp_deriv(const MPoly& a, long p) {
    MPoly out;
    for (size_t i = 1; i < a.size(); ++i) out.push_back((a[i] * static_cast<long>(i % p)) % p);
    mnorm(out);
    return out;
}

// x^e mod g by square and multiply.
inline MPoly mp_xpow_mod(long e, const MPoly& g, long p) {
    MPoly result{1};
    MPoly base{0, 1};
    base = mp_mod(base, g, p);
    while (e > 0) {
        if (e & 1) result = mp_mod(mp_mul(result, base, p), g, p);
        base = mp_mod(mp_mul(base, base, p), g, p);
        e >>= 1;
    }
    return result;
}

// Extended Euclid in F_p[x]: returns (u, v) with u*a + v*b = 1 for coprime a, b.
inline std::pair<MPoly, MPoly> mp_bezout(const MPoly& a, const MPoly& b, long p) {
    MPoly r0 = a, r1 = b;
    MPoly u0{1}, u1{};
    MPoly v0{}, v1{1};
    while (!r1.empty()) {
        auto [q, r] = mp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        MPoly u2 = mp_sub(u0, mp_mul(q, u1, p), p);
        u0 = std::move(u1);
        u1 = std::move(u2);
        MPoly v2 = mp_sub(v0, mp_mul(q, v1, p), p);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    // r0 is a nonzero constant gcd; scale both cofactors by its inverse.
    long s = inv_mod(r0.empty() ? 1 : r0[0], p);
    for (auto& c : u0) c = (c * s) % p;
    for (auto& c : v0) c = (c * s) % p;
    return {u0, v0};
}

// Berlekamp factorization of a monic squarefree g over F_p into monic
// irreducible factors. Builds the Frobenius matrix, takes its fixed space,
// and splits with gcd(g, v - c) scans; p is small so the c-scan is cheap.
inline std::vector<MPoly> berlekamp(const MPoly& g, long p) {
    int d = mdeg(g);
    if (d <= 1) return {g};

    // Frobenius matrix: column j holds x^(p*j) mod g.
    MPoly xp = mp_xpow_mod(p, g, p);
    std::vector<std::vector<long>> M(static_cast<size_t>(d), std::vector<long>(static_cast<size_t>(d), 0));
    MPoly power{1};
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i <= mdeg(power); ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = power[static_cast<size_t>(i)];
        power = mp_mod(mp_mul(power, xp, p), g, p);
    }
    for (int i = 0; i < d; ++i)
        M[static_cast<size_t>(i)][static_cast<size_t>(i)] = ((M[static_cast<size_t>(i)][static_cast<size_t>(i)] - 1) % p + p) % p;

    // Nullspace of (Frobenius - I) by Gauss-Jordan over F_p.
    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (int col = 0; col < d && row < static_cast<size_t>(d); ++col) {
        size_t sel = row;
        while (sel < static_cast<size_t>(d) && M[sel][static_cast<size_t>(col)] == 0) ++sel;
        if (sel == static_cast<size_t>(d)) continue;
        std::swap(M[sel], M[row]);
        long s = inv_mod(M[row][static_cast<size_t>(col)], p);
        for (int j = 0; j < d; ++j) M[row][static_cast<size_t>(j)] = (M[row][static_cast<size_t>(j)] * s) % p;
        for (size_t i = 0; i < static_cast<size_t>(d); ++i) {
            if (i == row || M[i][static_cast<size_t>(col)] == 0) continue;
            long f = M[i][static_cast<size_t>(col)];
            for (int j = 0; j < d; ++j)
                M[i][static_cast<size_t>(j)] = ((M[i][static_cast<size_t>(j)] - f * M[row][static_cast<size_t>(j)]) % p + p) % p;
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(d), false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<MPoly> kernel;
    for (int free_col = 0; free_col < d; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        MPoly v(static_cast<size_t>(d), 0);
        v[static_cast<size_t>(free_col)] = 1;
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            long val = M[r][static_cast<size_t>(free_col)];
            v[static_cast<size_t>(pivot_col_of_row[r])] = (p - val) % p;
        }
        mnorm(v);
        kernel.push_back(std::move(v));
    }

    size_t factor_count = kernel.size() + 1;  // +1 for the constants direction
    std::vector<MPoly> factors{g};
    if (factor_count == 1) return factors;

    for (const MPoly& v : kernel) {
        if (factors.size() == factor_count) break;
        std::vector<MPoly> next;
        for (const MPoly& h : factors) {
            if (mdeg(h) <= 1) {
                next.push_back(h);
                continue;
            }
            MPoly rem = h;
            for (long c = 0; c < p && mdeg(rem) > 0; ++c) {
                MPoly vc = mp_mod(v, rem, p);
                if (vc.empty()) vc = MPoly{};
                // v - c
                MPoly shifted = vc;
                if (shifted.empty()) shifted.push_back(0);
                shifted[0] = ((shifted[0] - c) % p + p) % p;
                mnorm(shifted);
                if (shifted.empty()) {
                    // v == c on all of rem: no split from this residue
                    continue;
                }
                MPoly d_ = mp_gcd(rem, shifted, p);
                if (mdeg(d_) > 0 && mdeg(d_) < mdeg(rem)) {
                    next.push_back(d_);
                    rem = mp_divmod(rem, d_, p).first;
                } else if (mdeg(d_) > 0 && mdeg(d_) == mdeg(rem)) {
                    // whole of rem lies over residue c; keep scanning others
                    continue;
                }
            }
            if (mdeg(rem) > 0) next.push_back(rem);
        }
        factors = std::move(next);
    }
    for (auto& f : factors) f = mp_monic(f, p);
    return factors;
}

// One linear Hensel step: from f = g*h (mod p^j) to (mod p^(j+1)), where
// t*h = 1 (mod g, p). g, h monic with canonical coefficients in [0, p^j).
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const MPoly& t, long p,
                        const mpz_class& pj) {
    ZPoly e = zsub(f, zmul(g, h));
    ZPoly e_div(e.size());
    for (size_t i = 0; i < e.size(); ++i) e_div[i] = e[i] / pj;  // exact by construction
    znorm(e_div);
    MPoly em = mp_from_z(e_div, p);

    MPoly gm = mp_from_z(g, p), hm = mp_from_z(h, p);
    MPoly u = mp_mod(mp_mul(t, em, p), gm, p);
    MPoly num = mp_sub(em, mp_mul(u, hm, p), p);
    auto [w, r] = mp_divmod(num, gm, p);
    (void)r;  // r = 0 by the Bezout identity

    for (size_t i = 0; i < u.size(); ++i) {
        if (g.size() <= i) g.resize(i + 1, mpz_class(0));
        g[i] += pj * u[i];
    }
    for (size_t i = 0; i < w.size(); ++i) {
        if (h.size() <= i) h.resize(i + 1, mpz_class(0));
        h[i] += pj * w[i];
    }
}

// Lift the full modular factorization of monic f to modulus p^m, pairwise:
// split off the first factor against the product of the rest, recurse.
inline void hensel_lift_all(const ZPoly& f, const std::vector<MPoly>& modular, long p, int m,
                            std::vector<ZPoly>& out) {
    const mpz_class pm = [&] {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
        return r;
    }();
    if (modular.size() == 1) {
        out.push_back(zreduce(f, pm));
        return;
    }
    MPoly gm = modular[0];
    MPoly hm{1};
    for (size_t i = 1; i < modular.size(); ++i) hm = mp_mul(hm, modular[i], p);
    const MPoly t = mp_bezout(gm, hm, p).second;

    ZPoly g(gm.size()), h(hm.size());
    for (size_t i = 0; i < gm.size(); ++i) g[i] = gm[i];
    for (size_t i = 0; i < hm.size(); ++i) h[i] = hm[i];

    mpz_class pj(p);
    for (int j = 1; j < m; ++j) {
        hensel_step(f, g, h, t, p, pj);
        pj *= p;
    }
    out.push_back(g);
    hensel_lift_all(h, std::vector<MPoly>(modular.begin() + 1, modular.end()), p, m, out);
}

// Coefficient bound for monic factors of monic f (Mignotte, loose form).
inline mpz_class factor_coeff_bound(const ZPoly& f) {
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    mpz_class two_d;
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(zdeg(f)));
    return two_d * root;
}

inline ZPoly symmetric_rep(const ZPoly& a, const mpz_class& m) {
    ZPoly out = a;
    mpz_class half = m / 2;
    for (auto& c : out) {
        c = mod_floor(c, m);
        if (c > half) c -= m;
    }
    znorm(out);
    return out;
}

// Factor a monic squarefree integer polynomial into monic integer irreducibles.
inline std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& f) {
    if (zdeg(f) <= 1) return {f};

    // Pick the smallest odd prime keeping f squarefree mod p.
    long p = 0;
    MPoly fp;
    for (mpz_class cand(3);; mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t())) {
        long pc = cand.get_si();
        MPoly reduced = mp_from_z(f, pc);
        if (mdeg(reduced) != zdeg(f)) continue;  // cannot happen for monic f, kept for clarity
        if (mdeg(mp_gcd(reduced, mp_deriv(reduced, pc), pc)) == 0) {
            p = pc;
            fp = mp_monic(reduced, pc);
            break;
        }
    }

    std::vector<MPoly> modular = berlekamp(fp, p);
    if (modular.size() == 1) return {f};

    mpz_class bound = 2 * factor_coeff_bound(f) + 1;
    int m = 1;
    mpz_class pm(p);
    while (pm <= bound) {
        pm *= p;
        ++m;
    }
    std::vector<ZPoly> lifted;
    hensel_lift_all(f, modular, p, m, lifted);

    // Subset recombination: try products of lifted factors, smallest first.
    std::vector<ZPoly> result;
    ZPoly remaining_f = f;
    std::vector<ZPoly> pool = lifted;
    size_t subset_size = 1;
    while (2 * subset_size <= pool.size()) {
        bool found = false;
        const size_t k = pool.size();
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{1};
            for (size_t i : idx) cand = zreduce(zmul(cand, pool[i]), pm);
            cand = symmetric_rep(cand, pm);
            if (!cand.empty() && cand.back() == 1 && zdeg(cand) <= zdeg(remaining_f)) {
                auto [q, r] = zdivmod_monic(remaining_f, cand);
                if (r.empty()) {
                    result.push_back(cand);
                    remaining_f = q;
                    std::vector<ZPoly> next_pool;
                    for (size_t i = 0, j = 0; i < k; ++i) {
                        if (j < idx.size() && idx[j] == i) {
                            ++j;
                            continue;
                        }
                        next_pool.push_back(pool[i]);
                    }
                    pool = std::move(next_pool);
                    found = true;
                    break;
                }
            }
            // next combination
            int pos = static_cast<int>(subset_size) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == k - subset_size + static_cast<size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t i = static_cast<size_t>(pos) + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (zdeg(remaining_f) > 0) result.push_back(remaining_f);
    return result;
}

}  // namespace detail

// Monic irreducible factors of p over Q with multiplicities, sorted by degree
// then lexicographically by coefficients. The product of the factors raised
// to their multiplicities, times the leading coefficient of p, equals p.
inline std::vector<std::pair<Polynomial, int>> irreducible_factors(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw degenerate_input("factorization needs a nonzero polynomial of degree >= 1");

    Polynomial q = p.monic();
    Polynomial sqf = squarefree_part(q);
    int d = sqf.degree();

    // Substitute x = y/L to clear denominators while staying monic:
    // G(y) = L^d * sqf(y/L) has integer coefficients c_i * L^(d-i).
    mpz_class L(1);
    for (const Rational& c : sqf.coefficients()) L = lcm(L, c.denominator());
    detail::ZPoly G(static_cast<size_t>(d) + 1);
    mpz_class Lpow(1);
    for (int i = d; i >= 0; --i) {
        Rational scaled = sqf.coeff(i) * Rational(Lpow);
        G[static_cast<size_t>(i)] = scaled.numerator();  // denominator is 1 by choice of L
        Lpow *= L;
    }

    std::vector<detail::ZPoly> zfactors = detail::factor_monic_squarefree_z(G);

    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& zf : zfactors) {
        // Map back: the coefficient of x^i in Γ(L*x)/L^k is zf[i] / L^(k-i).
        int k = detail::zdeg(zf);
        std::vector<Rational> coeffs(static_cast<size_t>(k) + 1);
        mpz_class Lki(1);
        for (int i = k; i >= 0; --i) {
            coeffs[static_cast<size_t>(i)] = Rational(zf[static_cast<size_t>(i)], Lki);
            Lki *= L;
        }
        Polynomial factor{std::vector<Rational>(coeffs)};
        int mult = 0;
        Polynomial tmp = q;
        while (true) {
            auto [quot, rem] = tmp.divmod(factor);
            if (!rem.is_zero()) break;
            tmp = quot;
            ++mult;
        }
        out.emplace_back(factor.monic(), mult);
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = 0; i <= a.first.degree(); ++i) {
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        }
        return false;
    });

    // Exactness guard: the factorization must reconstruct p on the nose.
    Polynomial check{p.leading()};
    for (const auto& [f, e] : out) check *= f.pow(static_cast<unsigned>(e));
    if (!(check == p)) throw error("internal error: factorization failed to reconstruct input");

    return out;
}

}  // namespace linterm

#endif
