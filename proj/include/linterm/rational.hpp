#ifndef LINTERM_RATIONAL_HPP
#define LINTERM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace linterm {

// Arbitrary-precision rational in canonical form: gcd(num, den) = 1, den > 0.
// Thin wrapper over GMP's mpq_class; GMP keeps results canonical, we only
// have to canonicalize on construction from raw parts or text.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, 2 and -1 are rationals
    Rational(const mpz_class& n) : v_(n) {}

    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" with optional whitespace around tokens.
    static Rational parse(std::string_view text) {
        std::string s(text);
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw degenerate_input("cannot parse rational: '" + s + "'");
        if (q.get_den() == 0) throw division_by_zero("rational with zero denominator: '" + s + "'");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Members rather than statics so generic field code can ask any element
    // for constants of "the same field" (number-field elements need that).
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational abs() const {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

  private:
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace linterm

#endif
