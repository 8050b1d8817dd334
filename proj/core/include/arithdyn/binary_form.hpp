#pragma once

#include "arithdyn/polynomial.hpp"

namespace arithdyn {

/// Scales p to integer coefficients with gcd 1 and a positive leading
/// coefficient (first term in graded order, i.e. the highest power of the
/// first variable among top-degree terms). Zero stays zero.
MultiPoly make_primitive(const MultiPoly& p);

/// gcd over Q of two nonzero homogeneous forms in two variables, returned
/// primitive. A degree-0 result means the forms share no projective zero.
/// Throws std::invalid_argument for zero, non-homogeneous, or non-binary input.
MultiPoly binary_form_gcd(const MultiPoly& f, const MultiPoly& g);

/// Product of the distinct irreducible factors of a nonzero binary form,
/// returned primitive. Same zero set as `f`, each zero simple.
MultiPoly binary_form_squarefree(const MultiPoly& f);

}  // namespace arithdyn
