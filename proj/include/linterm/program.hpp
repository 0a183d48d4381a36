#ifndef LINTERM_PROGRAM_HPP
#define LINTERM_PROGRAM_HPP

#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace linterm {

// A homogeneous single-guard linear loop: while (guard . x > 0) { x := update x }.
// Termination is decided over the reals; the entries themselves are rational.
struct HomogeneousProgram {
    Matrix<Rational> update;
    std::vector<Rational> guard;

    // Where the program came from, for reporting. Frontends fill these in;
    // programs built directly from matrices get default coordinate names.
    std::vector<std::string> variables;
    std::string origin;

    size_t dimension() const { return update.rows(); }
};

inline HomogeneousProgram make_program(Matrix<Rational> update, std::vector<Rational> guard,
                                       std::vector<std::string> variables = {},
                                       std::string origin = {}) {
    if (update.rows() != update.cols()) throw dimension_mismatch("update matrix must be square");
    if (guard.size() != update.rows())
        throw dimension_mismatch("guard length differs from update dimension");
    if (variables.empty()) {
        for (size_t i = 1; i <= update.rows(); ++i) variables.push_back("x" + std::to_string(i));
    }
    if (variables.size() != update.rows())
        throw dimension_mismatch("variable name count differs from dimension");
    return HomogeneousProgram{std::move(update), std::move(guard), std::move(variables),
                              std::move(origin)};
}

}  // namespace linterm

#endif
