#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "linterm/decision.hpp"
#include "oracles.hpp"

using linterm::AlgebraicNumber;
using linterm::Certificate;
using linterm::HomogeneousProgram;
using linterm::Matrix;
using linterm::NumberField;
using linterm::NumberFieldElement;
using linterm::NumberFieldPtr;
using linterm::Polynomial;
using linterm::Rational;
using linterm::Verdict;
using oracles::mat_q;
using oracles::vec_q;

namespace {

Polynomial poly(std::initializer_list<long> coeffs_low_to_high) {
    std::vector<Rational> c;
    for (long v : coeffs_low_to_high) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// 4x4 example with spectrum {2 - sqrt2, 2, 2, 2 + sqrt2} and a guard that
// defeats orthogonality only at 2 + sqrt2.
HomogeneousProgram tridiagonal_example() {
    return linterm::make_program(mat_q(4, {2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, 1, 0, 0, 0, 2}),
                                 vec_q({-1, -1, 1, 1}));
}

// x' = x+y, y' = y, z' = -z: single positive eigenvalue 1, generalized
// eigenspace span{e1, e2}, so its row-space complement is span{e3}.
Matrix<Rational> shear_and_flip() { return mat_q(3, {1, 1, 0, 0, 1, 0, 0, 0, -1}); }

}  // namespace

TEST_CASE("decision on the worked examples", "[decision]") {
    SECTION("tridiagonal example is nonterminating at 2 + sqrt2") {
        Certificate cert = linterm::decide(tridiagonal_example());
        REQUIRE(cert.verdict == Verdict::NonTerminating);
        REQUIRE(cert.char_polynomial == poly({8, -24, 22, -8, 1}));
        REQUIRE(cert.positive_eigenvalues.size() == 3);
        REQUIRE(cert.failing_eigenvalue.has_value());
        REQUIRE(cert.failing_eigenvalue->value.minpoly() == poly({2, -4, 1}));
        REQUIRE(compare(cert.failing_eigenvalue->value, Rational(3)) > 0);

        // The scan starts at 2 + sqrt2 and stops there, so the conjugate pair
        // sharing the factor t^2 - 4t + 2 is reported and 2 itself is not.
        REQUIRE(cert.memberships.size() == 2);
        REQUIRE(cert.memberships[0].eigenvalue.value.minpoly() == poly({2, -4, 1}));
        REQUIRE(compare(cert.memberships[0].eigenvalue.value, Rational(1)) < 0);
        REQUIRE_FALSE(cert.memberships[0].member);
        REQUIRE(compare(cert.memberships[1].eigenvalue.value, Rational(3)) > 0);
        REQUIRE_FALSE(cert.memberships[1].member);
        REQUIRE(cert.memberships[0].pivot_entry == cert.memberships[0].pivot_entry.one());
    }
    SECTION("no positive eigenvalue short-circuits to terminating") {
        Certificate cert =
            linterm::decide(linterm::make_program(mat_q(2, {3, -2, 4, -1}), vec_q({1, 0})));
        REQUIRE(cert.verdict == Verdict::Terminating);
        REQUIRE(cert.positive_eigenvalues.empty());
        REQUIRE(cert.memberships.empty());
        REQUIRE_FALSE(cert.failing_eigenvalue.has_value());
    }
    SECTION("guard inside the complement terminates") {
        Certificate cert =
            linterm::decide(linterm::make_program(shear_and_flip(), vec_q({0, 0, 1})));
        REQUIRE(cert.verdict == Verdict::Terminating);
        REQUIRE(cert.positive_eigenvalues.size() == 1);
        REQUIRE(cert.memberships.size() == 1);
        REQUIRE(cert.memberships[0].member);
        REQUIRE(cert.memberships[0].pivot_entry.is_zero());
    }
    SECTION("guard meeting the generalized eigenspace does not terminate") {
        Certificate cert =
            linterm::decide(linterm::make_program(shear_and_flip(), vec_q({0, 1, 0})));
        REQUIRE(cert.verdict == Verdict::NonTerminating);
        REQUIRE(cert.failing_eigenvalue.has_value());
        REQUIRE(cert.failing_eigenvalue->value.rational_value() == Rational(1));
        REQUIRE(cert.failing_eigenvalue->multiplicity == 2);
    }
    SECTION("companion matrix of t^2 + 2t - 1 with guard e1") {
        Certificate cert =
            linterm::decide(linterm::make_program(mat_q(2, {0, 1, 1, -2}), vec_q({1, 0})));
        REQUIRE(cert.verdict == Verdict::NonTerminating);
        REQUIRE(cert.positive_eigenvalues.size() == 1);
        REQUIRE(cert.failing_eigenvalue->value.minpoly() == poly({-1, 2, 1}));
    }
    SECTION("zero guard is rejected") {
        REQUIRE_THROWS_AS(
            linterm::decide(linterm::make_program(mat_q(2, {1, 0, 0, 1}), vec_q({0, 0}))),
            linterm::degenerate_guard);
    }
}

TEST_CASE("generalized eigenmatrix of the tridiagonal example", "[decision]") {
    HomogeneousProgram p = tridiagonal_example();
    AlgebraicNumber lambda(poly({2, -4, 1}), {Rational(3), Rational(4)});  // 2 + sqrt2
    Matrix<NumberFieldElement> e = linterm::generalized_eigenmatrix(p.update, lambda);
    NumberFieldPtr field = e.at(0, 0).field();

    auto q = [&](long v) { return NumberFieldElement::from_rational(field, Rational(v)); };
    // sqrt2 expressed through the generator g = 2 + sqrt2.
    NumberFieldElement s = NumberFieldElement::generator(field) - q(2);
    REQUIRE(s * s == q(2));

    Matrix<NumberFieldElement> expected = Matrix<NumberFieldElement>::from_rows({
        {q(18), q(16) * s, q(14), q(-4) * s},
        {q(16) * s, q(32), q(16) * s, q(-14)},
        {q(14), q(16) * s, q(18), q(-12) * s},
        {q(0), q(0), q(0), q(4)},
    });
    REQUIRE(e == expected);

    SECTION("reduced row echelon form of the eigenmatrix") {
        Matrix<NumberFieldElement> r = linterm::rref(e);
        Matrix<NumberFieldElement> expected_rref = Matrix<NumberFieldElement>::from_rows({
            {q(1), q(0), q(-1), q(0)},
            {q(0), q(1), s, q(0)},
            {q(0), q(0), q(0), q(1)},
            {q(0), q(0), q(0), q(0)},
        });
        REQUIRE(r == expected_rref);
        REQUIRE(linterm::rank(e) == 3);
    }
    SECTION("guard membership fails with pivot one") {
        auto result = linterm::row_space_contains(e, linterm::embed_vector(p.guard, field));
        REQUIRE_FALSE(result.member);
        REQUIRE(result.pivot_entry == q(1));
    }
    SECTION("non-eigenvalues are rejected") {
        AlgebraicNumber sqrt3(poly({-3, 0, 1}), {Rational(1), Rational(2)});
        REQUIRE_THROWS_AS(linterm::generalized_eigenmatrix(p.update, sqrt3),
                          linterm::field_mismatch);
    }
}

TEST_CASE("membership bookkeeping across several eigenvalues", "[decision]") {
    SECTION("scan continues past a passing larger eigenvalue") {
        // Row((A-3I)^2) = span{e2}, Row((A-I)^2) = span{e1}: the guard e2
        // passes at 3 and fails at 1.
        Certificate cert =
            linterm::decide(linterm::make_program(mat_q(2, {3, 0, 0, 1}), vec_q({0, 1})));
        REQUIRE(cert.verdict == Verdict::NonTerminating);
        REQUIRE(cert.failing_eigenvalue->value.rational_value() == Rational(1));
        REQUIRE(cert.memberships.size() == 2);
        REQUIRE(cert.memberships[0].eigenvalue.value.rational_value() == Rational(1));
        REQUIRE_FALSE(cert.memberships[0].member);
        REQUIRE(cert.memberships[1].eigenvalue.value.rational_value() == Rational(3));
        REQUIRE(cert.memberships[1].member);
    }
    SECTION("terminating program reports every eigenvalue as a member") {
        // Row((A-3I)^3) = span{e2,e3}, Row((A-I)^3) = span{e1,e3}: e3 is in both.
        Certificate cert = linterm::decide(
            linterm::make_program(mat_q(3, {3, 0, 0, 0, 1, 0, 0, 0, -1}), vec_q({0, 0, 1})));
        REQUIRE(cert.verdict == Verdict::Terminating);
        REQUIRE(cert.memberships.size() == 2);
        REQUIRE(cert.memberships[0].eigenvalue.value.rational_value() == Rational(1));
        REQUIRE(cert.memberships[1].eigenvalue.value.rational_value() == Rational(3));
        for (const auto& m : cert.memberships) REQUIRE(m.member);
        REQUIRE_FALSE(cert.failing_eigenvalue.has_value());
    }
}

TEST_CASE("decision agrees with kernel orthogonality", "[decision]") {
    // Independent reading of the same criterion: the guard lies in the row
    // space of (A - lambda I)^n exactly when it is orthogonal to that
    // matrix's right kernel, the generalized eigenspace of lambda.
    std::mt19937_64 rng(62025);
    int nonterminating = 0, terminating = 0;
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 2 + rng() % 2;
        Matrix<Rational> a(n, n, Rational(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                a.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
        std::vector<Rational> f;
        bool zero = true;
        for (size_t i = 0; i < n; ++i) {
            f.emplace_back(static_cast<long>(rng() % 7) - 3);
            zero = zero && f.back().is_zero();
        }
        if (zero) f[0] = Rational(1);

        bool expect_nonterminating = false;
        for (const auto& rec : linterm::positive_real_eigenvalues(a)) {
            Matrix<NumberFieldElement> e = linterm::generalized_eigenmatrix(a, rec.value);
            NumberFieldPtr field = e.at(0, 0).field();
            std::vector<NumberFieldElement> fe = linterm::embed_vector(f, field);
            for (const auto& kernel_vector : linterm::nullspace_basis(e))
                if (!linterm::dot(fe, kernel_vector).is_zero()) expect_nonterminating = true;
        }

        Certificate cert = linterm::decide(linterm::make_program(a, f));
        REQUIRE((cert.verdict == Verdict::NonTerminating) == expect_nonterminating);
        (expect_nonterminating ? nonterminating : terminating) += 1;

        // Structural certificate invariants, independent of the verdict.
        REQUIRE(cert.char_polynomial == oracles::char_poly_cofactor(a));
        for (size_t i = 0; i + 1 < cert.memberships.size(); ++i)
            REQUIRE(compare(cert.memberships[i].eigenvalue.value,
                            cert.memberships[i + 1].eigenvalue.value) < 0);
        if (cert.verdict == Verdict::Terminating) {
            REQUIRE_FALSE(cert.failing_eigenvalue.has_value());
            REQUIRE(cert.memberships.size() == cert.positive_eigenvalues.size());
        } else {
            REQUIRE(cert.failing_eigenvalue.has_value());
            bool failing_reported = false;
            for (const auto& m : cert.memberships) {
                REQUIRE(m.member == m.pivot_entry.is_zero());
                if (m.eigenvalue.value.minpoly() == cert.failing_eigenvalue->value.minpoly())
                    failing_reported = true;
            }
            REQUIRE(failing_reported);
        }
    }
    // Both verdicts must actually occur for the sweep to mean anything.
    REQUIRE(nonterminating > 10);
    REQUIRE(terminating > 10);
}
