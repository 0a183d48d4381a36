#ifndef LINTERM_DECISION_HPP
#define LINTERM_DECISION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eigen.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "number_field.hpp"
#include "program.hpp"

namespace linterm {

inline Matrix<NumberFieldElement> embed_matrix(const Matrix<Rational>& a,
                                               const NumberFieldPtr& field) {
    Matrix<NumberFieldElement> out(a.rows(), a.cols(),
                                   NumberFieldElement::from_rational(field, Rational(0)));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = NumberFieldElement::from_rational(field, a.at(i, j));
    return out;
}

inline std::vector<NumberFieldElement> embed_vector(const std::vector<Rational>& v,
                                                    const NumberFieldPtr& field) {
    std::vector<NumberFieldElement> out;
    out.reserve(v.size());
    for (const Rational& q : v) out.push_back(NumberFieldElement::from_rational(field, q));
    return out;
}

// (A - lambda I)^n over Q(lambda), with n the full dimension: its kernel is
// the generalized eigenspace of lambda, its row space that space's orthogonal
// complement. lambda enters symbolically as the field generator, so one
// computation covers every conjugate root of its minimal polynomial.
inline Matrix<NumberFieldElement> generalized_eigenmatrix(const Matrix<Rational>& a,
                                                          const AlgebraicNumber& lambda) {
    if (a.rows() != a.cols()) throw dimension_mismatch("generalized eigenmatrix of non-square matrix");
    if (!(char_poly(a) % lambda.minpoly()).is_zero())
        throw field_mismatch("the given algebraic number is not an eigenvalue of the matrix");
    NumberFieldPtr field = NumberField::make(lambda.minpoly());
    Matrix<NumberFieldElement> m = embed_matrix(a, field);
    NumberFieldElement gen = NumberFieldElement::generator(field);
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= gen;
    return matrix_power(m, static_cast<unsigned>(a.rows()));
}

enum class Verdict { Terminating, NonTerminating };

inline std::string to_string(Verdict v) {
    return v == Verdict::Terminating ? "TERMINATING" : "NONTERMINATING";
}

// Outcome of one row-space membership test, tied to the eigenvalue it was
// run for. Conjugate eigenvalues share one test and therefore one result.
struct MembershipResult {
    EigenRecord eigenvalue;
    bool member;
    NumberFieldElement pivot_entry;
};

// The full decision record: enough to re-check the verdict without
// re-deriving eigenvalues. memberships covers every positive eigenvalue
// whose irreducible factor was tested before the (possible) early exit,
// listed in ascending eigenvalue order.
struct Certificate {
    Verdict verdict;
    Polynomial char_polynomial;
    std::vector<EigenRecord> positive_eigenvalues;
    std::vector<MembershipResult> memberships;
    std::optional<EigenRecord> failing_eigenvalue;
};

// Decides termination of "while (guard . x > 0) x := A x" over the reals.
// The loop is nonterminating iff some positive eigenvalue's generalized
// eigenspace fails to be orthogonal to the guard; equivalently, iff the
// guard falls outside the row space of (A - lambda I)^n for some positive
// eigenvalue lambda. With no positive eigenvalue at all the loop terminates
// on every real input and the eigenvalue loop is skipped entirely.
//
// Eigenvalues are visited largest first; the first failure stops the scan
// (its conjugates share the result, by field arithmetic being embedding-free).
inline Certificate decide(const HomogeneousProgram& p) {
    bool guard_zero = true;
    for (const Rational& g : p.guard) guard_zero = guard_zero && g.is_zero();
    if (guard_zero) throw degenerate_guard("guard vector is identically zero");

    Certificate cert{Verdict::Terminating, char_poly(p.update), positive_real_eigenvalues(p.update),
                     {}, std::nullopt};
    if (cert.positive_eigenvalues.empty()) return cert;

    // One membership test per irreducible factor with a positive root.
    std::vector<std::pair<Polynomial, RowMembership<NumberFieldElement>>> tested;
    auto find_tested = [&](const Polynomial& m) -> const RowMembership<NumberFieldElement>* {
        for (const auto& [poly, result] : tested)
            if (poly == m) return &result;
        return nullptr;
    };

    for (auto it = cert.positive_eigenvalues.rbegin(); it != cert.positive_eigenvalues.rend();
         ++it) {
        const EigenRecord& rec = *it;
        const RowMembership<NumberFieldElement>* result = find_tested(rec.value.minpoly());
        if (result == nullptr) {
            Matrix<NumberFieldElement> e = generalized_eigenmatrix(p.update, rec.value);
            NumberFieldPtr field = e.at(0, 0).field();
            RowMembership<NumberFieldElement> r =
                row_space_contains(e, embed_vector(p.guard, field));
            tested.emplace_back(rec.value.minpoly(), std::move(r));
            result = &tested.back().second;
        }
        if (!result->member) {
            cert.verdict = Verdict::NonTerminating;
            cert.failing_eigenvalue = rec;
            break;
        }
    }

    for (const EigenRecord& rec : cert.positive_eigenvalues) {
        const RowMembership<NumberFieldElement>* result = find_tested(rec.value.minpoly());
        if (result != nullptr)
            cert.memberships.push_back({rec, result->member, result->pivot_entry});
    }
    return cert;
}

}  // namespace linterm

#endif
