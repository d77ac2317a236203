#pragma once

#include <complex>
#include <string>
#include <vector>

#include "divlab/numeric.hpp"

namespace divlab {

// Exact element of Q(sqrt(d_1), ..., sqrt(d_k)) for pairwise-coprime squarefree
// radicands d_i (|d_i| compared for coprimality; -1 is a valid radicand).
// Coordinates are indexed by subset bitmask S of {1..k}; the basis element for S
// is prod_{i in S} sqrt(d_i).
class MultiQuadElement {
 public:
  MultiQuadElement();  // rational 0 in the empty tower
  MultiQuadElement(std::vector<BigInt> radicands, std::vector<Rational> coords);

  static MultiQuadElement from_rational(const Rational& q,
                                        std::vector<BigInt> radicands = {});
  // The basis radical prod_{i in S} sqrt(d_i) for subset mask S.
  static MultiQuadElement radical(std::vector<BigInt> radicands, unsigned mask);

  const std::vector<BigInt>& radicands() const { return radicands_; }
  const std::vector<Rational>& coords() const { return coords_; }
  size_t tower_rank() const { return radicands_.size(); }

  bool same_tower(const MultiQuadElement& o) const { return radicands_ == o.radicands_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  MultiQuadElement operator-() const;
  MultiQuadElement operator+(const MultiQuadElement& o) const;
  MultiQuadElement operator-(const MultiQuadElement& o) const;
  MultiQuadElement operator*(const MultiQuadElement& o) const;
  MultiQuadElement operator*(const Rational& s) const;
  bool operator==(const MultiQuadElement& o) const;

  MultiQuadElement inverse() const;  // throws on zero
  MultiQuadElement pow(long e) const;

  // Galois conjugation: flip the sign of sqrt(d_i) for each bit i set in mask.
  MultiQuadElement conjugate(unsigned flip_mask) const;
  // All 2^k conjugates (with duplicates when the element lies in a subtower).
  std::vector<MultiQuadElement> conjugates() const;
  std::vector<MultiQuadElement> distinct_conjugates() const;

  // Embed into a tower whose radicand list contains this element's list.
  MultiQuadElement promote(const std::vector<BigInt>& bigger) const;

  std::complex<double> numeric() const;

  std::string str() const;

 private:
  std::vector<BigInt> radicands_;   // ascending
  std::vector<Rational> coords_;    // size 1 << radicands_.size()
};

// Validated tower construction helpers.
void validate_radicands(const std::vector<BigInt>& radicands);

// sqrt of q inside the tower: q = s * w^2 with s squarefree; s must factor over
// the tower's radicands. Throws math_error otherwise.
MultiQuadElement sqrt_in_tower(const Rational& q, const std::vector<BigInt>& radicands);

// Smallest pairwise-coprime radicand list able to host sqrt of every given value
// (prime radicands plus -1 when needed).
std::vector<BigInt> tower_for_sqrts(const std::vector<Rational>& values);

// Spec-surface wrappers.
MultiQuadElement mq_mul(const MultiQuadElement& a, const MultiQuadElement& b);
MultiQuadElement mq_add(const MultiQuadElement& a, const MultiQuadElement& b);

}  // namespace divlab
