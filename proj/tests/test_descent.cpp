#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "divlab/descent.hpp"
#include "divlab/errors.hpp"
#include "divlab/pseudodiv_example.hpp"

using namespace divlab;
namespace ex = divlab::pseudodiv_example;

namespace {

std::mt19937_64 rng(0xdece97);

TowerPoint example_lift() {
  LegendreCurve lc = ex::legendre();
  return lift_quartic_point(quartic_model(lc), Rational(4), Rational(1), lc);
}

// Brute search for rational points on the quartic s^2 = q4 t^4 + q2 t^2 + q0
// with t = n/d, |s|,|t| <= 200. Test utility only.
std::vector<std::pair<Rational, Rational>> quartic_points(const QuarticCurve& q, int count) {
  std::vector<std::pair<Rational, Rational>> out;
  for (long d = 1; d <= 2 && out.size() < static_cast<size_t>(count); ++d)
    for (long n = -60 * d; n <= 60 * d && out.size() < static_cast<size_t>(count); ++n) {
      if (std::gcd(std::labs(n), d) != 1) continue;
      Rational t = make_rational(n, d);
      if (abs(t) > 200) continue;
      Rational rhs = q.q4 * rational_pow(t, 4) + q.q2 * t * t + q.q0;
      if (rhs < 0) continue;
      auto s = exact_sqrt(rhs);
      if (!s) continue;
      if (abs(*s) > 200) continue;
      out.emplace_back(*s, t);
    }
  return out;
}

}  // namespace

TEST_CASE("legendre to short form") {
  LegendreCurve lc = ex::legendre();
  Curve e = lc.short_form();
  CHECK(e.b() == Rational(-171));
  CHECK(e.c() == Rational(810));
  CHECK_THROWS_AS(LegendreCurve(Rational(1), Rational(2), Rational(3)), math_error);
  CHECK_THROWS_AS(LegendreCurve(Rational(0), Rational(0), Rational(0)), math_error);
}

TEST_CASE("quartic model of the worked example") {
  QuarticCurve q = quartic_model(ex::legendre());
  CHECK(q.delta == 7);
  CHECK(q.q4 == Rational(7));
  CHECK(q.q2 == Rational(-54));
  CHECK(q.q0 == Rational(63));
  CHECK(q.contains(Rational(4), Rational(1)));
  CHECK(q.contains(Rational(12), Rational(3)));
  CHECK(q.contains(Rational(204), Rational(9)));
  CHECK_FALSE(q.contains(Rational(4), Rational(2)));
}

TEST_CASE("quartic model squarefree-part bookkeeping") {
  // alpha, beta, gamma = (1, -1, 0): (a-b)(b-g) = 2 * -1 = -2
  LegendreCurve lc(Rational(1), Rational(-1), Rational(0));
  QuarticCurve q = quartic_model(lc);
  CHECK(q.delta == -2);
  // delta omega^2 = (a-b)(b-g) with omega rational
  Rational prod = (lc.alpha - lc.beta) * (lc.beta - lc.gamma);
  Rational omega_sq = prod / Rational(q.delta);
  CHECK(exact_sqrt(omega_sq).has_value());
}

TEST_CASE("lift of (4,1) is D = (-1 + 2 sqrt 7, 14 - 10 sqrt 7)") {
  TowerPoint d = example_lift();
  REQUIRE_FALSE(d.is_infinity());
  CHECK(d.x().coords()[0] == -1);
  CHECK(d.x().coords()[1] == 2);
  CHECK(d.y().coords()[0] == 14);
  CHECK(d.y().coords()[1] == -10);
  CHECK(on_curve(ex::curve(), d));
}

TEST_CASE("lift of (12,3) matches the listed divisor (27 + 6 sqrt 7, 126 + 54 sqrt 7)") {
  LegendreCurve lc = ex::legendre();
  TowerPoint d = lift_quartic_point(quartic_model(lc), Rational(12), Rational(3), lc);
  CHECK(d.x().coords()[0] == 27);
  CHECK(d.x().coords()[1] == 6);
  CHECK(d.y().coords()[0] == 126);
  CHECK(d.y().coords()[1] == 54);
}

TEST_CASE("lift of (204,9) lands on the curve") {
  LegendreCurve lc = ex::legendre();
  TowerPoint d = lift_quartic_point(quartic_model(lc), Rational(204), Rational(9), lc);
  CHECK(on_curve(ex::curve(), d));
  CHECK_THROWS_WITH_AS(lift_quartic_point(quartic_model(lc), Rational(5), Rational(1), lc),
                       "(s,t) is not on the quartic", math_error);
}

TEST_CASE("[4]D = (10, 10)") {
  TowerPoint p4 = point_mul(ex::curve(), 4, example_lift());
  REQUIRE_FALSE(p4.is_infinity());
  CHECK(p4.x().is_rational());
  CHECK(p4.x().rational_value() == 10);
  CHECK(p4.y().rational_value() == 10);
}

TEST_CASE("conjugate difference recovers the 2-torsion point (9, 0)") {
  TowerPoint d = example_lift();
  TowerPoint conj(d.x().conjugate(1), d.y().conjugate(1));
  Curve e = ex::curve();
  TowerPoint diff = point_add(e, conj, point_neg(e, d));
  REQUIRE_FALSE(diff.is_infinity());
  CHECK(diff.x().rational_value() == 9);
  CHECK(diff.y().is_zero());
  // and [2](9,0) = infinity
  CHECK(point_mul(e, 2, diff).is_infinity());
}

TEST_CASE("four torsion generators double to (alpha,0) and (beta,0)") {
  auto [a_prime, b_prime] = four_torsion_generators(ex::legendre());
  Curve e = ex::curve();
  TowerPoint a2 = point_mul(e, 2, a_prime);
  CHECK(a2.x().rational_value() == 9);
  TowerPoint b2 = point_mul(e, 2, b_prime);
  CHECK(b2.x().rational_value() == 6);
  CHECK(point_mul(e, 4, a_prime).is_infinity());
  CHECK(point_mul(e, 4, b_prime).is_infinity());
}

TEST_CASE("rational 2-torsion doubles to infinity on random legendre curves") {
  std::uniform_int_distribution<long> d(-20, 20);
  int done = 0;
  while (done < 15) {
    long a = d(rng), b = d(rng);
    long g = -a - b;
    if (a == b || b == g || a == g) continue;
    LegendreCurve lc{Rational(a), Rational(b), Rational(g)};
    Curve e = lc.short_form();
    for (Rational root : {lc.alpha, lc.beta, lc.gamma}) {
      TowerPoint t(MultiQuadElement::from_rational(root), MultiQuadElement::from_rational(Rational(0)));
      CHECK(on_curve(e, t));
      CHECK(point_mul(e, 2, t).is_infinity());
    }
    ++done;
  }
}

TEST_CASE("lifted quartic points satisfy the curve equation exactly") {
  std::uniform_int_distribution<long> d(-12, 12);
  int points_checked = 0;
  int attempt = 0;
  while (points_checked < 50 && attempt < 1500) {
    ++attempt;
    long a, b, g;
    if (attempt % 4 == 0) {
      // scaled copies of the worked example always carry small quartic points
      long lam = 1 + (attempt / 4) % 7;
      a = 9 * lam * lam;
      b = 6 * lam * lam;
      g = -15 * lam * lam;
    } else {
      a = d(rng);
      b = d(rng);
      g = -a - b;
    }
    if (a == b || b == g || a == g) continue;
    LegendreCurve lc{Rational(a), Rational(b), Rational(g)};
    QuarticCurve q = quartic_model(lc);
    Curve e = lc.short_form();
    for (const auto& [s, t] : quartic_points(q, 4)) {
      TowerPoint lifted = lift_quartic_point(q, s, t, lc);
      CHECK(on_curve(e, lifted));
      // [4] of a lifted point always has rational coordinates
      TowerPoint p4 = point_mul(e, 4, lifted);
      if (!p4.is_infinity()) {
        CHECK(p4.x().is_rational());
        CHECK(p4.y().is_rational());
      }
      ++points_checked;
    }
  }
  CHECK(points_checked >= 50);
}

TEST_CASE("group law axioms on random tower points") {
  // sample points on y^2 = x^3 - 171x + 810 over Q(sqrt 7) via the quartic
  LegendreCurve lc = ex::legendre();
  QuarticCurve q = quartic_model(lc);
  Curve e = ex::curve();
  std::vector<TowerPoint> pts;
  for (const auto& [s, t] : quartic_points(q, 6)) pts.push_back(lift_quartic_point(q, s, t, lc));
  REQUIRE(pts.size() >= 3);
  TowerPoint inf = TowerPoint::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(point_add(e, pts[i], inf) == pts[i]);
    CHECK(point_add(e, pts[i], point_neg(e, pts[i])).is_infinity());
    for (size_t j = 0; j < pts.size(); ++j)
      for (size_t k = 0; k < pts.size(); ++k) {
        TowerPoint lhs = point_add(e, point_add(e, pts[i], pts[j]), pts[k]);
        TowerPoint rhs = point_add(e, pts[i], point_add(e, pts[j], pts[k]));
        CHECK(lhs == rhs);
      }
  }
  // commutativity and small multiples
  CHECK(point_add(e, pts[0], pts[1]) == point_add(e, pts[1], pts[0]));
  TowerPoint dbl = point_add(e, pts[0], pts[0]);
  CHECK(point_mul(e, 2, pts[0]) == dbl);
  CHECK(point_mul(e, 3, pts[0]) == point_add(e, dbl, pts[0]));
}

TEST_CASE("all 16 divisor abscissas verify against the preimage polynomial") {
  DivisorVerification rep =
      verify_divisor_abscissas(ex::legendre(), ex::point_x(), 4, ex::divisor_table());
  CHECK(rep.checks.size() == 16);
  for (const auto& chk : rep.checks) {
    CAPTURE(chk.abscissa);
    CHECK(chk.preimage_root);
    CHECK(chk.ordinate_on_curve);
  }
  CHECK(rep.all_pass);
}

TEST_CASE("corrupted curve fails the verification (negative control)") {
  LegendreCurve lc = ex::legendre();
  // verify against a different abscissa input: x(P) = 11 is not x(4D)
  DivisorVerification rep = verify_divisor_abscissas(lc, Rational(11), 4, ex::divisor_table());
  CHECK_FALSE(rep.all_pass);
}
