#ifndef LINTERM_SIMULATE_HPP
#define LINTERM_SIMULATE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "algebraic.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "number_field.hpp"
#include "program.hpp"

// Bounded, exact execution of a program: a check on the decision procedure
// that shares none of its machinery beyond the arithmetic types. A verdict of
// TERMINATING can be probed with random rational starts; a synthesized
// witness can be driven directly in Q(lambda).

namespace linterm {

struct RunOutcome {
    enum class Kind { TerminatedAt, SurvivedBound };
    Kind kind;
    // Iterations completed: the first k with f.x_k <= 0, or the bound.
    long step;

    bool terminated() const { return kind == Kind::TerminatedAt; }

    friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

namespace detail {

template <class F, class SignFn>
RunOutcome run_loop(const Matrix<F>& a, const std::vector<F>& f, std::vector<F> x, long bound,
                    SignFn sign) {
    if (bound < 0) throw degenerate_input("negative step bound");
    if (x.size() != a.rows()) throw dimension_mismatch("start vector has wrong dimension");
    for (long k = 0; k < bound; ++k) {
        if (sign(dot(f, x)) <= 0) return {RunOutcome::Kind::TerminatedAt, k};
        x = matvec(a, x);
    }
    return {RunOutcome::Kind::SurvivedBound, bound};
}

}  // namespace detail

inline RunOutcome run(const HomogeneousProgram& p, const std::vector<Rational>& start,
                      long bound) {
    return detail::run_loop(p.update, p.guard, start, bound,
                            [](const Rational& v) { return v.sign(); });
}

// Execution over Q(alpha), e.g. on a witness vector whose coordinates mention
// the eigenvalue. alpha must be a root of the field's modulus.
inline RunOutcome run(const HomogeneousProgram& p, const std::vector<NumberFieldElement>& start,
                      const AlgebraicNumber& alpha, long bound) {
    if (start.empty()) throw degenerate_input("empty start vector");
    NumberFieldPtr field = start.front().field();
    Matrix<NumberFieldElement> a = embed_matrix(p.update, field);
    std::vector<NumberFieldElement> f = embed_vector(p.guard, field);
    return detail::run_loop(a, f, start, bound, [&alpha](const NumberFieldElement& v) {
        return sign_of(v, alpha);
    });
}

// Deterministic rational start vectors: numerators in [-magnitude, magnitude],
// denominators in [1, magnitude]. Raw modulo reduction keeps the stream
// identical across platforms, which matters more here than the slight bias.
inline std::vector<std::vector<Rational>> sample_rational_inputs(size_t count, size_t dimension,
                                                                 long magnitude, uint64_t seed) {
    if (dimension == 0) throw degenerate_input("zero-dimensional sample request");
    if (magnitude < 1) throw degenerate_input("sample magnitude must be at least 1");
    std::mt19937_64 gen(seed);
    const uint64_t m = static_cast<uint64_t>(magnitude);
    std::vector<std::vector<Rational>> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        std::vector<Rational> x;
        x.reserve(dimension);
        for (size_t j = 0; j < dimension; ++j) {
            long num = static_cast<long>(gen() % (2 * m + 1)) - magnitude;
            long den = static_cast<long>(gen() % m) + 1;
            x.emplace_back(mpz_class(num), mpz_class(den));
        }
        out.push_back(std::move(x));
    }
    return out;
}

struct AdaptiveOutcome {
    // False when even the largest bound was survived.
    bool conclusive;
    long bound_used;
    RunOutcome outcome;
};

// Retry with doubled bounds until the run terminates or max_bound is spent.
// Survival is never proof of nontermination, hence the explicit flag.
inline AdaptiveOutcome run_adaptive(const HomogeneousProgram& p,
                                    const std::vector<Rational>& start, long initial_bound = 100,
                                    long max_bound = 6400) {
    if (initial_bound < 1 || max_bound < initial_bound)
        throw degenerate_input("adaptive bounds must satisfy 1 <= initial <= max");
    long bound = initial_bound;
    while (true) {
        RunOutcome o = run(p, start, bound);
        if (o.terminated()) return {true, bound, o};
        if (bound >= max_bound) return {false, bound, o};
        bound = std::min(bound * 2, max_bound);
    }
}

}  // namespace linterm

#endif
