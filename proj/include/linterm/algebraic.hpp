#ifndef LINTERM_ALGEBRAIC_HPP
#define LINTERM_ALGEBRAIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace linterm {

// Open interval (low, high) that brackets exactly one real root of some
// polynomial, with neither endpoint a root.
struct IsolatingInterval {
    Rational low;
    Rational high;

    Rational width() const { return high - low; }
    Rational midpoint() const { return Rational(1, 2) * (low + high); }

    friend bool operator==(const IsolatingInterval& a, const IsolatingInterval& b) {
        return a.low == b.low && a.high == b.high;
    }
};

// A real algebraic number: a monic irreducible minimal polynomial plus an
// isolating interval selecting one of its real roots. Values are immutable;
// refinement returns new objects.
class AlgebraicNumber {
  public:
    AlgebraicNumber(Polynomial minpoly, IsolatingInterval interval)
        : minpoly_(std::move(minpoly)), iv_(std::move(interval)) {
        if (minpoly_.degree() < 1 || !minpoly_.is_monic())
            throw degenerate_input("minimal polynomial must be monic of degree >= 1");
        if (!(iv_.low < iv_.high)) throw degenerate_input("isolating interval with low >= high");
        if (minpoly_.eval(iv_.low).is_zero() || minpoly_.eval(iv_.high).is_zero())
            throw degenerate_input("isolating interval endpoint is a root");
        if (sturm_count(minpoly_, iv_.low, iv_.high) != 1)
            throw degenerate_input("interval does not isolate exactly one root");
    }

    static AlgebraicNumber from_rational(const Rational& r) {
        Polynomial minpoly{-r, Rational(1)};
        return AlgebraicNumber(std::move(minpoly), {r - Rational(1), r + Rational(1)});
    }

    const Polynomial& minpoly() const { return minpoly_; }
    const IsolatingInterval& interval() const { return iv_; }

    bool is_rational() const { return minpoly_.degree() == 1; }

    Rational rational_value() const {
        if (!is_rational()) throw degenerate_input("algebraic number is not rational");
        return -minpoly_.coeff(0);
    }

    // One bisection step: halve the interval, keeping the half that still
    // contains the root (decided by a Sturm count, except in the rational
    // case where the root is known exactly).
    AlgebraicNumber refined() const {
        AlgebraicNumber out = *this;
        std::vector<Polynomial> chain = is_rational() ? std::vector<Polynomial>{} : sturm_chain(minpoly_);
        out.iv_ = refine_step(chain);
        return out;
    }

    AlgebraicNumber refined_below_width(const Rational& w) const {
        AlgebraicNumber out = *this;
        std::vector<Polynomial> chain = is_rational() ? std::vector<Polynomial>{} : sturm_chain(minpoly_);
        while (!(out.iv_.width() < w)) out.iv_ = out.refine_step(chain);
        return out;
    }

    // Shrink until the given point lies strictly outside the closed interval.
    // Precondition: the point is not the root itself.
    AlgebraicNumber refined_to_avoid(const Rational& point) const {
        AlgebraicNumber out = *this;
        std::vector<Polynomial> chain = is_rational() ? std::vector<Polynomial>{} : sturm_chain(minpoly_);
        while (!(point < out.iv_.low) && !(out.iv_.high < point)) out.iv_ = out.refine_step(chain);
        return out;
    }

    std::string to_string(const std::string& var = "t") const {
        return "root of " + minpoly_.to_string(var) + " in (" + iv_.low.to_string() + ", " +
               iv_.high.to_string() + ")";
    }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (!(a.minpoly_ == b.minpoly_)) return false;
        if (a.is_rational()) return true;  // one root per degree-1 polynomial
        // Same irreducible polynomial: equal iff the interval hull still
        // contains a single root.
        Rational lo = min(a.iv_.low, b.iv_.low), hi = max(a.iv_.high, b.iv_.high);
        return sturm_count(a.minpoly_, lo, hi) == 1;
    }

  private:
    IsolatingInterval refine_step(const std::vector<Polynomial>& chain) const {
        if (is_rational()) {
            Rational r = rational_value();
            return {Rational(1, 2) * (iv_.low + r), Rational(1, 2) * (r + iv_.high)};
        }
        Rational mid = iv_.midpoint();  // never a root: irreducible of degree >= 2
        if (sturm_count(chain, iv_.low, mid) == 1) return {iv_.low, mid};
        return {mid, iv_.high};
    }

    Polynomial minpoly_;
    IsolatingInterval iv_;
};

// Three-way comparison of an algebraic number against a rational point. An
// irrational root never equals a rational, so refined_to_avoid terminates.
inline int compare(const AlgebraicNumber& a, const Rational& r) {
    if (a.is_rational()) {
        Rational v = a.rational_value();
        return v < r ? -1 : (r < v ? 1 : 0);
    }
    AlgebraicNumber x = a.refined_to_avoid(r);
    return x.interval().high <= r ? -1 : 1;
}

// Three-way comparison of two algebraic numbers.
inline int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_rational()) return compare(a, b.rational_value());
    if (a.is_rational()) return -compare(b, a.rational_value());
    if (a == b) return 0;
    AlgebraicNumber x = a, y = b;
    while (true) {
        if (x.interval().high <= y.interval().low) return -1;
        if (y.interval().high <= x.interval().low) return 1;
        x = x.refined();
        y = y.refined();
    }
}

// Isolating intervals for the positive real roots of an irreducible
// polynomial of degree >= 2 (so no rational point, in particular no interval
// endpoint or midpoint, can be a root). Intervals come back sorted and
// pairwise disjoint, with nonnegative lower endpoints.
inline std::vector<IsolatingInterval> isolate_positive_roots_of_irreducible(const Polynomial& f) {
    if (f.degree() < 2) throw degenerate_input("expected an irreducible polynomial of degree >= 2");
    std::vector<Polynomial> chain = sturm_chain(f);
    Rational zero(0), bound = cauchy_root_bound(f);
    int total = sturm_count(chain, zero, bound);
    std::vector<IsolatingInterval> out;
    if (total == 0) return out;

    struct Segment {
        Rational lo, hi;
        int count;
    };
    std::vector<Segment> stack{{zero, bound, total}};
    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = Rational(1, 2) * (s.lo + s.hi);
        int left = sturm_count(chain, s.lo, mid);
        int right = s.count - left;
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.low < b.low; });
    return out;
}

}  // namespace linterm

#endif
