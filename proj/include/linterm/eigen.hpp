#ifndef LINTERM_EIGEN_HPP
#define LINTERM_EIGEN_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "algebraic.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace linterm {

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recurrence:
// n matrix products and exact divisions by 1..n, all in Q. O(n^4) and free of
// pivoting concerns, which keeps it independent of the elimination code used
// elsewhere.
inline Polynomial char_poly(const Matrix<Rational>& a) {
    if (a.rows() != a.cols()) throw dimension_mismatch("characteristic polynomial of non-square matrix");
    const size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    Matrix<Rational> m(n, n, Rational(0));
    for (size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        m = a * m;
        const Rational& diag = c[n - k + 1];
        for (size_t i = 0; i < n; ++i) m.at(i, i) += diag;
        Matrix<Rational> am = a * m;
        Rational trace(0);
        for (size_t i = 0; i < n; ++i) trace += am.at(i, i);
        c[n - k] = -(trace / Rational(mpz_class(k)));
    }
    return Polynomial(std::move(c));
}

// A positive real eigenvalue with its algebraic multiplicity in char_poly.
struct EigenRecord {
    AlgebraicNumber value;
    int multiplicity;
};

namespace detail {

// Shrink the given intervals (each isolating one positive root of its
// attached polynomial) and pick radii around the rational points until
// everything is pairwise disjoint and strictly to the right of zero. Returns
// final intervals for the rational points as well.
struct RootSite {
    Polynomial minpoly;
    int multiplicity;
    bool rational;
    Rational point;            // rational case
    IsolatingInterval iv;      // irrational case (placeholder otherwise)
};

inline void separate_sites(std::vector<RootSite>& sites) {
    const Rational zero(0);
    // Positive lower bounds and rational-point exclusion for the irrational sites.
    for (auto& s : sites) {
        if (s.rational) continue;
        AlgebraicNumber a(s.minpoly, s.iv);
        while (!(zero < a.interval().low)) a = a.refined();
        for (const auto& other : sites)
            if (other.rational) a = a.refined_to_avoid(other.point);
        s.iv = a.interval();
    }
    // Pairwise disjointness of the irrational intervals.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < sites.size(); ++i) {
            if (sites[i].rational) continue;
            for (size_t j = i + 1; j < sites.size(); ++j) {
                if (sites[j].rational) continue;
                IsolatingInterval&a = sites[i].iv, &b = sites[j].iv;
                if (a.high <= b.low || b.high <= a.low) continue;
                sites[i].iv = AlgebraicNumber(sites[i].minpoly, a).refined().interval();
                sites[j].iv = AlgebraicNumber(sites[j].minpoly, b).refined().interval();
                changed = true;
            }
        }
    }
    // Radii for the rational points: a third of the distance to the nearest
    // neighbor (or to zero), so the resulting intervals cannot collide.
    for (auto& s : sites) {
        if (!s.rational) continue;
        Rational gap = s.point;  // distance to zero keeps the low end positive
        for (const auto& other : sites) {
            if (&other == &s) continue;
            if (other.rational) {
                Rational d = (other.point - s.point).abs();
                gap = min(gap, d);
            } else {
                Rational d = other.iv.low > s.point ? other.iv.low - s.point : s.point - other.iv.high;
                gap = min(gap, d);
            }
        }
        Rational radius = Rational(1, 3) * gap;
        s.iv = {s.point - radius, s.point + radius};
    }
}

inline std::vector<RootSite> positive_root_sites(const Polynomial& p) {
    std::vector<RootSite> sites;
    const Rational zero(0);
    for (const auto& [factor, mult] : irreducible_factors(p)) {
        if (factor.degree() == 1) {
            Rational root = -factor.coeff(0);
            if (zero < root)
                sites.push_back({factor, mult, true, root, {zero, Rational(1)}});
        } else {
            for (const IsolatingInterval& iv : isolate_positive_roots_of_irreducible(factor))
                sites.push_back({factor, mult, false, zero, iv});
        }
    }
    separate_sites(sites);
    std::sort(sites.begin(), sites.end(),
              [](const RootSite& a, const RootSite& b) { return a.iv.low < b.iv.low; });
    return sites;
}

// Number of distinct positive real roots, counted without factoring: strip
// roots at zero from the squarefree part, then Sturm-count on (0, bound).
inline int count_positive_roots(const Polynomial& p) {
    Polynomial q = squarefree_part(p);
    while (!q.is_zero() && q.coeff(0).is_zero()) q = q.div_exact(Polynomial::variable());
    if (q.degree() < 1) return 0;
    return sturm_count(q, Rational(0), cauchy_root_bound(q));
}

}  // namespace detail

// Isolating intervals for the distinct positive real roots of p, pairwise
// disjoint with positive lower endpoints, sorted ascending. The count is
// certified against an independent Sturm count of the squarefree part.
inline std::vector<IsolatingInterval> isolate_positive_roots(const Polynomial& p) {
    if (p.is_zero()) throw degenerate_input("root isolation of the zero polynomial");
    if (p.degree() < 1) return {};
    int expected = detail::count_positive_roots(p);
    if (expected == 0) return {};
    std::vector<detail::RootSite> sites = detail::positive_root_sites(p);
    if (static_cast<int>(sites.size()) != expected)
        throw error("internal error: isolated root count disagrees with Sturm count");
    std::vector<IsolatingInterval> out;
    out.reserve(sites.size());
    for (const auto& s : sites) out.push_back(s.iv);
    return out;
}

// The positive real eigenvalues of A: each as an algebraic number (minimal
// polynomial = the irreducible factor of char_poly it roots, plus an
// isolating interval) with its algebraic multiplicity. Sorted ascending;
// intervals pairwise disjoint and strictly positive. The frequent case of no
// positive eigenvalue is detected by a Sturm count before any factoring work.
inline std::vector<EigenRecord> positive_real_eigenvalues(const Matrix<Rational>& a) {
    Polynomial chi = char_poly(a);
    int expected = detail::count_positive_roots(chi);
    if (expected == 0) return {};
    std::vector<detail::RootSite> sites = detail::positive_root_sites(chi);
    if (static_cast<int>(sites.size()) != expected)
        throw error("internal error: isolated eigenvalue count disagrees with Sturm count");
    std::vector<EigenRecord> out;
    out.reserve(sites.size());
    for (const auto& s : sites)
        out.push_back({AlgebraicNumber(s.minpoly, s.iv), s.multiplicity});
    return out;
}

}  // namespace linterm

#endif
