#ifndef LINTERM_WITNESS_HPP
#define LINTERM_WITNESS_HPP

#include <utility>
#include <vector>

#include "decision.hpp"
#include "eigen.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "number_field.hpp"
#include "program.hpp"

// Given an eigenvalue that makes the program nonterminating, produce a point
// the loop runs on forever: a generalized eigenvector w of that eigenvalue
// with f.w > 0. Along the orbit, f.(A^k w) is a polynomial in k times
// lambda^k with positive leading behaviour, so the guard stays positive.

namespace linterm {

struct Witness {
    AlgebraicNumber eigenvalue;
    // Minimal r with Ker((A - lambda I)^r) not contained in the guard's
    // orthogonal complement; w was found at this kernel depth.
    size_t rank;
    // f.vector > 0; coordinates live in Q(lambda).
    std::vector<NumberFieldElement> vector;
    // vector scaled by the positive integer `scale` so every coordinate is a
    // polynomial in lambda with integer coefficients.
    std::vector<NumberFieldElement> scaled_vector;
    mpz_class scale;
};

// Precondition: `failing` is a positive eigenvalue of p.update witnessing
// nontermination, i.e. the guard lies outside Row((A - lambda I)^n). This is
// re-checked; a passing eigenvalue raises not_a_failure.
inline Witness synthesize_witness(const HomogeneousProgram& p, const EigenRecord& failing) {
    const size_t n = p.dimension();
    const AlgebraicNumber& lambda = failing.value;

    Matrix<NumberFieldElement> e = generalized_eigenmatrix(p.update, lambda);
    NumberFieldPtr field = e.at(0, 0).field();
    std::vector<NumberFieldElement> f = embed_vector(p.guard, field);
    if (row_space_contains(e, f).member)
        throw not_a_failure("eigenvalue " + lambda.to_string() +
                            " does not witness nontermination");

    Matrix<NumberFieldElement> a = embed_matrix(p.update, field);
    Matrix<NumberFieldElement> b = a;
    NumberFieldElement gen = NumberFieldElement::generator(field);
    for (size_t i = 0; i < n; ++i) b.at(i, i) = b.at(i, i) - gen;

    // Walk up the kernel filtration Ker(B) <= Ker(B^2) <= ... until some
    // basis vector escapes f's orthogonal complement. Depth r-1 having no
    // such vector means Ker(B^(r-1)) is entirely orthogonal to f, so a hit
    // at depth r is automatically outside the previous kernel.
    Matrix<NumberFieldElement> power = b;
    for (size_t r = 1; r <= n; ++r) {
        for (std::vector<NumberFieldElement>& w : nullspace_basis(power)) {
            NumberFieldElement inner = dot(f, w);
            int s = sign_of(inner, lambda);
            if (s == 0) continue;
            if (s < 0)
                for (NumberFieldElement& c : w) c = -c;

            // Clear denominators: one positive integer multiple makes every
            // coordinate an integer polynomial in lambda.
            mpz_class scale(1);
            for (const NumberFieldElement& c : w)
                for (const Rational& coeff : c.rep().coefficients())
                    scale = lcm(scale, coeff.denominator());
            NumberFieldElement factor =
                NumberFieldElement::from_rational(field, Rational(scale));
            std::vector<NumberFieldElement> scaled;
            scaled.reserve(w.size());
            for (const NumberFieldElement& c : w) scaled.push_back(factor * c);

            return {lambda, r, std::move(w), std::move(scaled), std::move(scale)};
        }
        if (r < n) power = power * b;
    }
    throw error("internal error: failing eigenvalue produced no witness vector");
}

}  // namespace linterm

#endif
