#ifndef LINTERM_NUMBER_FIELD_HPP
#define LINTERM_NUMBER_FIELD_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "algebraic.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace linterm {

// The field Q[t]/(m(t)) for a monic irreducible modulus m. Shared by all of
// its elements through a shared_ptr; two fields are interchangeable iff their
// moduli are equal as polynomials.
class NumberField {
  public:
    // Checks irreducibility (cheap at the degrees we handle), so an invalid
    // modulus cannot produce a silently broken field.
    static std::shared_ptr<const NumberField> make(Polynomial modulus) {
        if (modulus.degree() < 1 || !modulus.is_monic())
            throw degenerate_input("number field modulus must be monic of degree >= 1");
        if (modulus.degree() > 1) {
            auto factors = irreducible_factors(modulus);
            if (factors.size() != 1 || factors[0].second != 1)
                throw degenerate_input("number field modulus is reducible: " + modulus.to_string());
        }
        return std::shared_ptr<const NumberField>(new NumberField(std::move(modulus)));
    }

    const Polynomial& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.modulus_ == b.modulus_;
    }

  private:
    explicit NumberField(Polynomial modulus) : modulus_(std::move(modulus)) {}
    Polynomial modulus_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// An element of a number field: a polynomial representative of degree below
// the modulus degree, tagged with its field. All operations reduce eagerly.
class NumberFieldElement {
  public:
    NumberFieldElement(NumberFieldPtr field, Polynomial representative)
        : field_(std::move(field)), rep_(std::move(representative)) {
        if (!field_) throw degenerate_input("number field element without a field");
        if (rep_.degree() >= field_->degree()) rep_ = rep_ % field_->modulus();
    }

    static NumberFieldElement from_rational(const NumberFieldPtr& field, const Rational& q) {
        return NumberFieldElement(field, Polynomial{q});
    }

    // The residue of t, i.e. the root the field adjoins.
    static NumberFieldElement generator(const NumberFieldPtr& field) {
        return NumberFieldElement(field, Polynomial::variable());
    }

    const NumberFieldPtr& field() const { return field_; }
    const Polynomial& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }

    Rational rational_value() const {
        if (!is_rational()) throw degenerate_input("element is not rational");
        return rep_.coeff(0);
    }

    NumberFieldElement zero() const { return NumberFieldElement(field_, Polynomial()); }
    NumberFieldElement one() const { return NumberFieldElement(field_, Polynomial{Rational(1)}); }

    NumberFieldElement operator-() const { return NumberFieldElement(field_, -rep_); }

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        a.check_same_field(b);
        return NumberFieldElement(a.field_, a.rep_ + b.rep_);
    }

    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        a.check_same_field(b);
        return NumberFieldElement(a.field_, a.rep_ - b.rep_);
    }

    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        a.check_same_field(b);
        return NumberFieldElement(a.field_, (a.rep_ * b.rep_) % a.field_->modulus());
    }

    friend NumberFieldElement operator*(const Rational& s, const NumberFieldElement& a) {
        return NumberFieldElement(a.field_, s * a.rep_);
    }

    NumberFieldElement& operator+=(const NumberFieldElement& o) { return *this = *this + o; }
    NumberFieldElement& operator-=(const NumberFieldElement& o) { return *this = *this - o; }
    NumberFieldElement& operator*=(const NumberFieldElement& o) { return *this = *this * o; }

    // Inverse via the extended Euclidean algorithm: the modulus is
    // irreducible, so any nonzero representative is coprime to it.
    NumberFieldElement inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero field element");
        auto [g, u, v] = poly_xgcd(rep_, field_->modulus());
        (void)v;
        if (g.degree() != 0)
            throw field_mismatch("representative shares a factor with the modulus");
        return NumberFieldElement(field_, (g.coeff(0).inverse() * u) % field_->modulus());
    }

    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a * b.inverse();
    }

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        a.check_same_field(b);
        return a.rep_ == b.rep_;
    }

    std::string to_string(const std::string& var = "t") const { return rep_.to_string(var); }

  private:
    void check_same_field(const NumberFieldElement& o) const {
        if (field_ == o.field_) return;
        if (!(*field_ == *o.field_))
            throw field_mismatch("elements of Q[t]/(" + field_->modulus().to_string() +
                                 ") and Q[t]/(" + o.field_->modulus().to_string() + ")");
    }

    NumberFieldPtr field_;
    Polynomial rep_;
};

// Exact sign of the real number rep(alpha), where alpha is the root of the
// field's modulus selected by the given algebraic number. Interval arithmetic
// over the isolating interval, tightened by Sturm-guided bisection until the
// sign is decided; a nonzero representative of degree below deg(m) cannot
// vanish at a root of the irreducible m, so the loop terminates.
inline int sign_of(const NumberFieldElement& e, const AlgebraicNumber& alpha) {
    if (!(alpha.minpoly() == e.field()->modulus()))
        throw field_mismatch("algebraic number is a root of " + alpha.minpoly().to_string() +
                             ", not of the field modulus " + e.field()->modulus().to_string());
    if (e.is_zero()) return 0;
    if (alpha.is_rational()) return e.rep().eval(alpha.rational_value()).sign();

    AlgebraicNumber a = alpha;
    while (true) {
        Bounds range = eval_interval(e.rep(), a.interval().low, a.interval().high);
        if (range.lo.sign() > 0) return 1;
        if (range.hi.sign() < 0) return -1;
        a = a.refined();
    }
}

}  // namespace linterm

#endif
