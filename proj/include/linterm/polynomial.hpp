#ifndef LINTERM_POLYNOMIAL_HPP
#define LINTERM_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace linterm {

// Univariate polynomial over Q. Coefficients are stored lowest degree first
// with no trailing zeros; the zero polynomial is the empty vector.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& constant) {  // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    Polynomial(std::initializer_list<Rational> coeffs)
        : c_(coeffs.begin(), coeffs.end()) {
        normalize();
    }

    // The monomial t.
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(int i) const {
        static const Rational kZero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    const Rational& leading() const {
        if (is_zero()) throw degenerate_input("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && leading().is_one(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        Polynomial r = p;
        for (auto& c : r.c_) c = c * s;
        r.normalize();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Quotient and remainder; coefficients live in a field so this is always
    // defined for a nonzero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw division_by_zero("polynomial division by zero");
        Polynomial rem = *this;
        if (rem.degree() < d.degree()) return {Polynomial(), rem};
        std::vector<Rational> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, Rational(0));
        Rational lead_inv = d.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            Rational f = rem.leading() * lead_inv;
            q[static_cast<size_t>(k)] = f;
            // rem -= f * t^k * d, done in place to skip re-normalization churn
            for (int i = 0; i <= d.degree(); ++i)
                rem.c_[static_cast<size_t>(i + k)] -= f * d.c_[static_cast<size_t>(i)];
            rem.normalize();
        }
        return {Polynomial(std::move(q)), rem};
    }

    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    // Exact division; throws if the remainder is nonzero.
    Polynomial div_exact(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw degenerate_input("polynomial division is not exact");
        return q;
    }

    Polynomial derivative() const {
        if (degree() < 1) return Polynomial();
        std::vector<Rational> out;
        out.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) out.push_back(Rational(mpz_class(i)) * c_[i]);
        return Polynomial(std::move(out));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) throw degenerate_input("monic form of zero polynomial");
        return leading().inverse() * *this;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r{Rational(1)};
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[static_cast<size_t>(i)];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            bool unit = a.is_one();
            if (i == 0 || !unit) out += a.to_string();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Closed rational interval [lo, hi], used for outward-rounded range estimates.
struct Bounds {
    Rational lo;
    Rational hi;
};

inline Bounds bounds_add(const Bounds& a, const Bounds& b) { return {a.lo + b.lo, a.hi + b.hi}; }

inline Bounds bounds_mul(const Bounds& a, const Bounds& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

// Range of p over [lo, hi] by interval Horner evaluation: the returned bounds
// contain every value p takes on the interval (they are not tight).
inline Bounds eval_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (hi < lo) throw degenerate_input("interval with hi < lo");
    Bounds x{lo, hi};
    Bounds acc{Rational(0), Rational(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = bounds_mul(acc, x);
        acc = bounds_add(acc, Bounds{p.coeff(i), p.coeff(i)});
    }
    return acc;
}

// Monic greatest common divisor by the Euclidean algorithm, with each
// remainder rescaled to monic to keep coefficient growth in check.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw degenerate_input("gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = (x % y);
        if (!r.is_zero()) r = r.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

// Extended Euclid: returns (g, u, v) monic with u*a + v*b = g.
inline std::tuple<Polynomial, Polynomial, Polynomial> poly_xgcd(const Polynomial& a,
                                                                const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw degenerate_input("xgcd of two zero polynomials");
    Polynomial r0 = a, r1 = b;
    Polynomial u0{Rational(1)}, u1{};
    Polynomial v0{}, v1{Rational(1)};
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Polynomial v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    Rational s = r0.leading().inverse();
    return {s * r0, s * u0, s * v0};
}

// p with all repeated roots collapsed to simple ones: p / gcd(p, p').
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw degenerate_input("squarefree part of zero polynomial");
    if (p.degree() == 0) return Polynomial{Rational(1)};
    Polynomial g = poly_gcd(p, p.derivative());
    return p.div_exact(g).monic();
}

// Sturm chain of p: p, p', then negated remainders until zero.
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    if (p.is_zero()) throw degenerate_input("Sturm chain of zero polynomial");
    chain.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Polynomial& a = chain[chain.size() - 2];
        const Polynomial& b = chain[chain.size() - 1];
        Polynomial r = a % b;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

// Sign variations of the chain evaluated at x, zeros skipped.
inline int sign_variations_at(const std::vector<Polynomial>& chain, const Rational& x) {
    int variations = 0, last = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Number of distinct real roots of the chain's polynomial in the half-open
// interval (a, b]. Callers arrange for squarefree polynomials and non-root
// endpoints, where this count is exact.
inline int sturm_count(const std::vector<Polynomial>& chain, const Rational& a,
                       const Rational& b) {
    if (b < a) throw degenerate_input("Sturm count over reversed interval");
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

inline int sturm_count(const Polynomial& p, const Rational& a, const Rational& b) {
    return sturm_count(sturm_chain(p), a, b);
}

// Every real root of p lies strictly inside (-B, B) for the returned B.
inline Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw degenerate_input("root bound needs degree >= 1");
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = max(m, p.coeff(i).abs());
    return Rational(1) + m / p.leading().abs();
}

}  // namespace linterm

#endif
