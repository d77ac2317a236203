#pragma once

#include <string>
#include <utility>
#include <vector>

#include "divlab/numeric.hpp"

namespace divlab {

// Dense univariate polynomial over Q, constant term first.
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly x();
  static UniPoly monomial(size_t deg, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  UniPoly pow(unsigned e) const;
  UniPoly derivative() const;
  Rational evaluate(const Rational& v) const;
  BigInt evaluate_integer(const BigInt& v) const;  // requires integer coefficients

  // Quotient/remainder over Q; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic (or zero)
  bool divides(const UniPoly& other) const;

  bool has_integer_coeffs() const;

  // poly = scale * primitive, primitive with coprime integer coefficients and
  // positive leading coefficient.
  struct IntegerForm {
    Rational scale;
    std::vector<BigInt> coeffs;
  };
  IntegerForm primitive_integer_form() const;  // nonzero polynomial only
  static UniPoly from_integer_coeffs(const std::vector<BigInt>& coeffs);

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational resultant(const UniPoly& f, const UniPoly& g);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f); requires deg f >= 1.
Rational poly_discriminant(const UniPoly& f);

}  // namespace divlab
