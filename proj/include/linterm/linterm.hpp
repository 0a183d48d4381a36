#ifndef LINTERM_LINTERM_HPP
#define LINTERM_LINTERM_HPP

// Umbrella header: the whole termination analysis toolkit.
//
// Layering, bottom to top:
//   rational, polynomial, factor      exact arithmetic over Q
//   algebraic, number_field           real algebraic numbers and Q(lambda)
//   matrix, eigen                     exact linear algebra, eigenvalue isolation
//   decision, witness                 the termination test and its counterexamples
//   simulate                          bounded exact execution, independent of the test
//   frontend, io, bench               parsing, documents, batch experiments

#include "algebraic.hpp"
#include "bench.hpp"
#include "decision.hpp"
#include "eigen.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "frontend.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "number_field.hpp"
#include "polynomial.hpp"
#include "program.hpp"
#include "rational.hpp"
#include "simulate.hpp"
#include "witness.hpp"

#endif
