#include "divlab/descent.hpp"

#include <sstream>

#include "divlab/errors.hpp"

namespace divlab {

LegendreCurve::LegendreCurve(Rational a, Rational b, Rational g)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
  if (alpha + beta + gamma != 0) throw math_error("legendre roots must sum to zero");
  if (alpha == beta || beta == gamma || alpha == gamma)
    throw math_error("legendre roots must be distinct");
}

Curve LegendreCurve::short_form() const {
  Rational b = alpha * beta + beta * gamma + alpha * gamma;
  Rational c = -(alpha * beta * gamma);
  return Curve(b, c);
}

bool QuarticCurve::contains(const Rational& s, const Rational& t) const {
  return s * s == q4 * rational_pow(t, 4) + q2 * t * t + q0;
}

std::string QuarticCurve::str() const {
  std::ostringstream os;
  os << "s^2 = " << to_string(q4) << "*t^4";
  os << (q2 < 0 ? " - " : " + ") << to_string(abs(q2)) << "*t^2";
  os << (q0 < 0 ? " - " : " + ") << to_string(abs(q0));
  return os.str();
}

QuarticCurve quartic_model(const LegendreCurve& curve) {
  Rational prod = (curve.alpha - curve.beta) * (curve.beta - curve.gamma);
  if (prod == 0) throw math_error("degenerate curve");
  BigInt delta = squarefree_part(BigInt(prod.get_num()) * prod.get_den());
  QuarticCurve q;
  q.delta = delta;
  // delta s^2 = delta^2 t^4 - 6 alpha delta t^2 + (beta-gamma)^2
  q.q4 = Rational(delta);
  q.q2 = Rational(-6) * curve.alpha;
  q.q0 = rational_pow(curve.beta - curve.gamma, 2) / Rational(delta);
  return q;
}

TowerPoint::TowerPoint(MultiQuadElement x, MultiQuadElement y)
    : infinity_(false), x_(std::move(x)), y_(std::move(y)) {
  if (!x_.same_tower(y_)) throw math_error("incompatible towers");
}

const MultiQuadElement& TowerPoint::x() const {
  if (infinity_) throw math_error("coordinates of the point at infinity");
  return x_;
}

const MultiQuadElement& TowerPoint::y() const {
  if (infinity_) throw math_error("coordinates of the point at infinity");
  return y_;
}

bool TowerPoint::operator==(const TowerPoint& o) const {
  if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
  return x_ == o.x_ && y_ == o.y_;
}

bool on_curve(const Curve& curve, const TowerPoint& p) {
  if (p.is_infinity()) return true;
  const auto& x = p.x();
  const auto& y = p.y();
  MultiQuadElement rhs = x * x * x + x * curve.b() + MultiQuadElement::from_rational(curve.c(), x.radicands());
  return y * y == rhs;
}

TowerPoint point_neg(const Curve&, const TowerPoint& p) {
  if (p.is_infinity()) return p;
  return TowerPoint(p.x(), -p.y());
}

TowerPoint point_add(const Curve& curve, const TowerPoint& p, const TowerPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (!p.x().same_tower(q.x())) throw math_error("incompatible towers");
  const auto& x1 = p.x();
  const auto& y1 = p.y();
  const auto& x2 = q.x();
  const auto& y2 = q.y();
  MultiQuadElement lambda;
  if (x1 == x2) {
    if ((y1 + y2).is_zero()) return TowerPoint::infinity();
    // tangent: (3x^2 + b) / (2y)
    MultiQuadElement num = x1 * x1 * Rational(3) + MultiQuadElement::from_rational(curve.b(), x1.radicands());
    lambda = num * (y1 * Rational(2)).inverse();
  } else {
    lambda = (y2 - y1) * (x2 - x1).inverse();
  }
  MultiQuadElement x3 = lambda * lambda - x1 - x2;
  MultiQuadElement y3 = lambda * (x1 - x3) - y1;
  return TowerPoint(std::move(x3), std::move(y3));
}

TowerPoint point_mul(const Curve& curve, long k, const TowerPoint& p) {
  if (k < 0) return point_mul(curve, -k, point_neg(curve, p));
  TowerPoint acc = TowerPoint::infinity();
  TowerPoint base = p;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1ul) acc = point_add(curve, acc, base);
    base = point_add(curve, base, base);
    e >>= 1ul;
  }
  return acc;
}

TowerPoint lift_quartic_point(const QuarticCurve& q, const Rational& s, const Rational& t,
                              const LegendreCurve& curve) {
  if (!q.contains(s, t)) throw math_error("(s,t) is not on the quartic");
  std::vector<BigInt> rads;
  if (q.delta != 1) rads.push_back(q.delta);
  Rational delta(q.delta);
  Rational u1 = s / 2;
  Rational u0 = (t * t * delta - curve.alpha) / 2;
  MultiQuadElement u = MultiQuadElement::from_rational(u0, rads);
  if (q.delta != 1)
    u = u + MultiQuadElement::radical(rads, 1) * u1;
  else
    u = u + MultiQuadElement::from_rational(u1, rads);  // sqrt(1) = 1
  MultiQuadElement sqrt_delta =
      (q.delta != 1) ? MultiQuadElement::radical(rads, 1) : MultiQuadElement::from_rational(Rational(1), rads);
  MultiQuadElement v = sqrt_delta * t * (u - MultiQuadElement::from_rational(curve.alpha, rads));
  TowerPoint d(u, v);
  if (!on_curve(curve.short_form(), d)) throw math_error("lifted point is not on the curve");
  return d;
}

std::pair<TowerPoint, TowerPoint> four_torsion_generators(const LegendreCurve& curve) {
  const Rational ab = curve.alpha - curve.beta;
  const Rational ag = curve.alpha - curve.gamma;
  const Rational ba = curve.beta - curve.alpha;
  const Rational bg = curve.beta - curve.gamma;
  std::vector<BigInt> rads = tower_for_sqrts({ab, ag, ba, bg, ab * ag, ba * bg});
  auto sq = [&](const Rational& v) { return sqrt_in_tower(v, rads); };
  auto emb = [&](const Rational& v) { return MultiQuadElement::from_rational(v, rads); };

  TowerPoint a_prime(emb(curve.alpha) + sq(ab * ag), sq(ag) * ab + sq(ab) * ag);
  TowerPoint b_prime(emb(curve.beta) + sq(ba * bg), sq(bg) * ba + sq(ba) * bg);
  Curve sf = curve.short_form();
  if (!on_curve(sf, a_prime) || !on_curve(sf, b_prime))
    throw math_error("four-torsion generator is not on the curve");
  TowerPoint a2 = point_mul(sf, 2, a_prime);
  TowerPoint b2 = point_mul(sf, 2, b_prime);
  if (a2.is_infinity() || !a2.x().is_rational() || a2.x().rational_value() != curve.alpha ||
      !a2.y().is_zero())
    throw math_error("[2]A' != (alpha, 0)");
  if (b2.is_infinity() || !b2.x().is_rational() || b2.x().rational_value() != curve.beta ||
      !b2.y().is_zero())
    throw math_error("[2]B' != (beta, 0)");
  return {a_prime, b_prime};
}

namespace {

MultiQuadElement eval_poly_in_tower(const UniPoly& f, const MultiQuadElement& x) {
  MultiQuadElement acc = MultiQuadElement::from_rational(Rational(0), x.radicands());
  for (size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * x + MultiQuadElement::from_rational(f.coeff(i), x.radicands());
  return acc;
}

}  // namespace

DivisorVerification verify_divisor_abscissas(
    const LegendreCurve& curve, const Rational& xP, int m,
    const std::vector<std::pair<MultiQuadElement, MultiQuadElement>>& candidates) {
  Curve sf = curve.short_form();
  UniPoly phi = preimage_poly(sf, m, xP);
  DivisorVerification out;
  out.m = m;
  out.all_pass = true;
  for (const auto& [x, y] : candidates) {
    AbscissaCheck chk;
    chk.abscissa = x.str();
    chk.preimage_root = eval_poly_in_tower(phi, x).is_zero();
    MultiQuadElement rhs =
        x * x * x + x * sf.b() + MultiQuadElement::from_rational(sf.c(), x.radicands());
    chk.ordinate_on_curve = (y * y == rhs);
    out.all_pass = out.all_pass && chk.preimage_root && chk.ordinate_on_curve;
    out.checks.push_back(std::move(chk));
  }
  return out;
}

}  // namespace divlab
