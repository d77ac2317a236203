#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divlab/division_poly.hpp"
#include "divlab/multiquad.hpp"
#include "divlab/numeric.hpp"

namespace divlab {

// y^2 = (x - alpha)(x - beta)(x - gamma) with alpha + beta + gamma = 0;
// short form b = ab+bg+ag, c = -abg.
struct LegendreCurve {
  Rational alpha, beta, gamma;

  LegendreCurve(Rational a, Rational b, Rational g);
  Curve short_form() const;
};

// delta s^2 = delta^2 t^4 - 6 alpha delta t^2 + (beta-gamma)^2, stored as
// s^2 = q4 t^4 + q2 t^2 + q0 with q4 = delta.
struct QuarticCurve {
  BigInt delta;  // squarefree part of (alpha-beta)(beta-gamma)
  Rational q4, q2, q0;

  bool contains(const Rational& s, const Rational& t) const;
  std::string str() const;
};

QuarticCurve quartic_model(const LegendreCurve& curve);

// Affine point over a multiquadratic tower, or the point at infinity.
class TowerPoint {
 public:
  TowerPoint() : infinity_(true) {}  // point at infinity
  TowerPoint(MultiQuadElement x, MultiQuadElement y);

  static TowerPoint infinity() { return TowerPoint(); }
  bool is_infinity() const { return infinity_; }
  const MultiQuadElement& x() const;
  const MultiQuadElement& y() const;
  bool operator==(const TowerPoint& o) const;

 private:
  bool infinity_;
  MultiQuadElement x_, y_;
};

bool on_curve(const Curve& curve, const TowerPoint& p);

TowerPoint point_neg(const Curve& curve, const TowerPoint& p);
TowerPoint point_add(const Curve& curve, const TowerPoint& p, const TowerPoint& q);
TowerPoint point_mul(const Curve& curve, long k, const TowerPoint& p);

// (s,t) on the quartic -> D = (u0 + u1 sqrt(delta), t sqrt(delta)(u - alpha))
// with u1 = s/2, u0 = (t^2 delta - alpha)/2; membership verified exactly.
TowerPoint lift_quartic_point(const QuarticCurve& q, const Rational& s, const Rational& t,
                              const LegendreCurve& curve);

// A' = (alpha + sqrt((a-b)(a-g)), (a-b) sqrt(a-g) + (a-g) sqrt(a-b)), and the
// beta-analogue B'; doubling checks [2]A' = (alpha, 0), [2]B' = (beta, 0).
std::pair<TowerPoint, TowerPoint> four_torsion_generators(const LegendreCurve& curve);

struct AbscissaCheck {
  std::string abscissa;   // canonical tower expression
  bool preimage_root = false;  // phi(x_i) == 0 exactly
  bool ordinate_on_curve = false;  // y_i^2 == x_i^3 + b x_i + c exactly
};

struct DivisorVerification {
  int m = 4;
  std::vector<AbscissaCheck> checks;
  bool all_pass = false;
};

// Verifies candidate (abscissa, ordinate) pairs against preimage_poly(curve,m,xP)
// and the curve equation, exactly in the tower.
DivisorVerification verify_divisor_abscissas(
    const LegendreCurve& curve, const Rational& xP, int m,
    const std::vector<std::pair<MultiQuadElement, MultiQuadElement>>& candidates);

}  // namespace divlab
