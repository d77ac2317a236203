#pragma once

#include <string>

#include "divlab/numeric.hpp"
#include "divlab/unipoly.hpp"

namespace divlab {

// Short Weierstrass curve y^2 = x^3 + b x + c with 4b^3 + 27c^2 != 0.
class Curve {
 public:
  Curve(Rational b, Rational c);
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  // x^3 + b x + c
  UniPoly rhs_cubic() const;
  bool operator==(const Curve& o) const { return b_ == o.b_ && c_ == o.c_; }
  std::string key() const;  // stable cache key

 private:
  Rational b_, c_;
};

// Univariate division polynomial: psi_m for odd m, psi_m / (2y) for even m.
// deg = (m^2-1)/2 (odd) or (m^2-4)/2 (even); m = 2 gives the constant 1.
struct DivisionPoly {
  int m = 0;
  UniPoly poly;
};

// x([m]Q) = theta(x) / psi_sq(x); theta monic of degree m^2.
struct AbscissaMap {
  int m = 0;
  UniPoly theta;
  UniPoly psi_sq;
};

DivisionPoly division_poly(const Curve& curve, int m);  // m >= 2
AbscissaMap abscissa_map(const Curve& curve, int m);    // m >= 1

// Integer-primitive polynomial of degree m^2 (positive leading coefficient)
// whose roots are the abscissas of all D with x([m]D) = xP.
UniPoly preimage_poly(const Curve& curve, int m, const Rational& xP);

// log-scale uniform bound for the |a_{r,s}| coefficient array of Psi_m:
// (3m^2+1)/2 log2 + m^2/2 - 3 log m - log pi.
double mckee_bound(int m);  // m >= 2

// deg(Psi_m) * (mckee_bound(m) + h(b) + h(c)); non-integer curves are rescaled
// to an integral model first.
double coeff_height_bound(int m, const Curve& curve);  // m >= 3

// Height bound for torsion abscissas:
// odd m:  (m^2-1)^2 log m + (m^2-1)/2 (h(b)+h(c)) + log 2
// even m: (m^2-4)^2 log m + (m^2-4)/2 (h(b)+h(c)) + log 2
double abscissa_height_bound(int m, const Curve& curve);  // m >= 3

long division_poly_degree(int m);

}  // namespace divlab
