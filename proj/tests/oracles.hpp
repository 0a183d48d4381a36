#ifndef LINTERM_TESTS_ORACLES_HPP
#define LINTERM_TESTS_ORACLES_HPP

// Reference implementations the tests check the library against. Each one
// deliberately takes a different algorithmic route than the library code:
// cofactor expansion instead of trace recursion, plain Gaussian solving
// instead of echelon-form reuse, direct statement-by-statement interpretation
// instead of matrix propagation, Kronecker divisor interpolation instead of
// modular factoring. Slow is fine here; independent is the point.

#include <optional>
#include <vector>

#include "linterm/frontend.hpp"
#include "linterm/matrix.hpp"
#include "linterm/polynomial.hpp"
#include "linterm/rational.hpp"

namespace oracles {

using linterm::Matrix;
using linterm::Polynomial;
using linterm::Rational;

inline Matrix<Rational> mat_q(size_t n, const std::vector<long>& entries) {
    Matrix<Rational> m(n, n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = Rational(entries[i * n + j]);
    return m;
}

inline std::vector<Rational> vec_q(const std::vector<long>& entries) {
    std::vector<Rational> v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

// det(t I - A) by recursive first-row cofactor expansion over Q[t].
inline Polynomial char_poly_cofactor(const Matrix<Rational>& a) {
    const size_t n = a.rows();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rational> coeffs{-a.at(i, j)};
            if (i == j) coeffs.push_back(Rational(1));
            m[i][j] = Polynomial(coeffs);
        }

    auto det = [](auto&& self, const std::vector<std::vector<Polynomial>>& mm) -> Polynomial {
        const size_t k = mm.size();
        if (k == 1) return mm[0][0];
        Polynomial acc;
        for (size_t j = 0; j < k; ++j) {
            std::vector<std::vector<Polynomial>> minor;
            for (size_t r = 1; r < k; ++r) {
                std::vector<Polynomial> row;
                for (size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(mm[r][c]);
                minor.push_back(std::move(row));
            }
            Polynomial term = mm[0][j] * self(self, minor);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(det, m);
}

// Is v a linear combination of m's rows? Solved as the system m^T y = v by
// plain Gaussian elimination with back-consistency check.
template <class F>
bool row_space_contains_solver(const Matrix<F>& m, const std::vector<F>& v) {
    const size_t rows = m.cols();  // equations
    const size_t cols = m.rows();  // unknowns y_0..y_{rows(m)-1}
    std::vector<std::vector<F>> aug(rows, std::vector<F>(cols + 1, m.at(0, 0).zero()));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = m.at(j, i);
        aug[i][cols] = v[i];
    }
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && aug[sel][col] == aug[sel][col].zero()) ++sel;
        if (sel == rows) continue;
        std::swap(aug[sel], aug[pivot_row]);
        F inv = aug[pivot_row][col].inverse();
        for (size_t j = col; j <= cols; ++j) aug[pivot_row][j] = aug[pivot_row][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            F factor = aug[i][col];
            if (factor == factor.zero()) continue;
            for (size_t j = col; j <= cols; ++j)
                aug[i][j] = aug[i][j] - factor * aug[pivot_row][j];
        }
        ++pivot_row;
    }
    for (const auto& row : aug) {
        bool all_zero = true;
        for (size_t j = 0; j < cols; ++j) all_zero = all_zero && row[j] == row[j].zero();
        if (all_zero && !(row[cols] == row[cols].zero())) return false;
    }
    return true;
}

// One body execution, statement by statement: each right-hand side reads the
// state as already mutated by the assignments above it.
inline void step_body(const linterm::SourceLoop& loop, std::vector<Rational>& state) {
    for (const linterm::Assignment& a : loop.body) {
        Rational value = a.constant;
        for (size_t j = 0; j < state.size(); ++j) value += a.coefficients[j] * state[j];
        state[a.target] = value;
    }
}

inline bool guards_hold(const linterm::SourceLoop& loop, const std::vector<Rational>& state) {
    for (const linterm::GuardRow& g : loop.guards) {
        Rational lhs(0);
        for (size_t j = 0; j < state.size(); ++j) lhs += g.coefficients[j] * state[j];
        bool ok = g.comparator == linterm::Comparator::Greater ? lhs > g.constant
                                                               : lhs >= g.constant;
        if (!ok) return false;
    }
    return true;
}

namespace detail {

inline std::vector<mpz_class> divisors_signed(const mpz_class& value) {
    std::vector<mpz_class> out;
    mpz_class a = abs(value);
    for (mpz_class d(1); d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        mpz_class q = a / d;
        if (q != d) {
            out.push_back(q);
            out.push_back(-q);
        }
    }
    return out;
}

// Lagrange interpolation through (points[i], values[i]) over Q.
inline Polynomial interpolate(const std::vector<Rational>& points,
                              const std::vector<Rational>& values) {
    Polynomial acc;
    for (size_t i = 0; i < points.size(); ++i) {
        Polynomial basis({Rational(1)});
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial({-points[j], Rational(1)});
            denom *= points[i] - points[j];
        }
        acc = acc + values[i] * denom.inverse() * basis;
    }
    return acc;
}

}  // namespace detail

// Kronecker's method as an irreducibility check for monic integer
// polynomials: a factor of degree d is pinned down by its values at d+1
// points, and those values must divide f's values there. Exponential, used
// only on small inputs; returns nullopt when the divisor search space is
// unreasonably large.
inline std::optional<bool> kronecker_irreducible(const Polynomial& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    for (const Rational& c : f.coefficients())
        if (!c.is_integer()) return std::nullopt;

    // Evaluation points 0, -1, 1, -2, 2, ... keep |f(x)| small.
    std::vector<Rational> points;
    for (int k = 0; static_cast<int>(points.size()) <= n / 2; ++k)
        points.emplace_back(k % 2 == 0 ? k / 2 : -((k + 1) / 2));

    for (int d = 1; d <= n / 2; ++d) {
        std::vector<std::vector<mpz_class>> choices;
        double space = 1;
        for (int i = 0; i <= d; ++i) {
            Rational fv = f.eval(points[i]);
            if (fv.is_zero()) return false;  // rational root at an integer point
            choices.push_back(detail::divisors_signed(fv.numerator()));
            space *= static_cast<double>(choices.back().size());
        }
        if (space > 2e6) return std::nullopt;

        std::vector<size_t> idx(d + 1, 0);
        while (true) {
            std::vector<Rational> values;
            for (int i = 0; i <= d; ++i) values.emplace_back(choices[i][idx[i]]);
            Polynomial g = detail::interpolate({points.begin(), points.begin() + d + 1}, values);
            if (g.degree() >= 1) {
                auto [q, r] = f.divmod(g);
                if (r.is_zero() && q.degree() >= 1) return false;
            }
            int pos = d;
            while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return true;
}

}  // namespace oracles

#endif
