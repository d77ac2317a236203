#pragma once

#include "divlab/multiquad.hpp"
#include "divlab/numeric.hpp"
#include "divlab/unipoly.hpp"

namespace divlab {

// Logarithmic (Weil) height in natural-log units; always >= 0.
struct LogHeight {
  double value = 0.0;
};

// h(a/b) = log max(|a|, b) for reduced a/b != 0; h(0) = 0.
LogHeight log_height_rational(const Rational& q);

// Height of the coprime-integer normalization: log max_i |a_i|.
LogHeight log_height_poly(const UniPoly& f);

// Place-by-place height sum log^+ max_i |a_i|_v over all places of Q.
// Distinct from log_height_poly for non-primitive polynomials (e.g. monic
// minimal polynomials with rational coefficients).
double poly_place_height(const UniPoly& f);

// Monic minimal polynomial over Q of a tower element (product over the
// distinct conjugates; no general factorization involved).
UniPoly minimal_polynomial(const MultiQuadElement& x);

// Mahler-measure height: (1/deg)(log|lc| + sum log^+ |conjugate|) of the
// primitive integer minimal polynomial. Rational input delegates to
// log_height_rational.
LogHeight log_height_multiquad(const MultiQuadElement& x);

struct MinPolyBoundReport {
  double h_alpha = 0.0;
  double h_falpha = 0.0;
  bool holds = false;  // h_alpha <= h_falpha + log 2
};
MinPolyBoundReport check_min_poly_bound(const MultiQuadElement& x);

}  // namespace divlab
