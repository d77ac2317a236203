#include "divlab/division_poly.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "divlab/errors.hpp"
#include "divlab/heights.hpp"

namespace divlab {

Curve::Curve(Rational b, Rational c) : b_(std::move(b)), c_(std::move(c)) {
  Rational disc_core = Rational(4) * rational_pow(b_, 3) + Rational(27) * rational_pow(c_, 2);
  if (disc_core == 0) throw math_error("singular curve");
}

UniPoly Curve::rhs_cubic() const {
  return UniPoly(std::vector<Rational>{c_, b_, Rational(0), Rational(1)});
}

std::string Curve::key() const { return to_string(b_) + ";" + to_string(c_); }

long division_poly_degree(int m) {
  long mm = static_cast<long>(m) * m;
  return (m % 2 == 1) ? (mm - 1) / 2 : (mm - 4) / 2;
}

namespace {

// Psi ladder cache per curve; extended on demand under a single lock.
struct Ladder {
  std::vector<UniPoly> psi;  // psi[i] = Psi_i
};

std::shared_ptr<const Ladder> psi_ladder(const Curve& curve, int m) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Ladder>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[curve.key()];
  if (slot && slot->psi.size() > static_cast<size_t>(m)) return slot;

  auto next = std::make_shared<Ladder>();
  if (slot) next->psi = slot->psi;
  auto& P = next->psi;
  const Rational& b = curve.b();
  const Rational& c = curve.c();
  if (P.empty()) {
    P.resize(5);
    P[0] = UniPoly();
    P[1] = UniPoly::constant(Rational(1));
    P[2] = UniPoly::constant(Rational(1));
    P[3] = UniPoly(std::vector<Rational>{-b * b, Rational(12) * c, Rational(6) * b, Rational(0),
                                         Rational(3)});
    P[4] = UniPoly(std::vector<Rational>{Rational(-16) * c * c - Rational(2) * b * b * b,
                                         Rational(-8) * b * c, Rational(-10) * b * b,
                                         Rational(40) * c, Rational(10) * b, Rational(0),
                                         Rational(2)});
  }
  UniPoly F = curve.rhs_cubic();
  UniPoly F2_16 = F * F * Rational(16);
  for (int n = static_cast<int>(P.size()); n <= m; ++n) {
    UniPoly out;
    if (n % 2 == 1) {
      int j = (n - 1) / 2;
      if (j % 2 == 0)
        out = F2_16 * P[j + 2] * P[j].pow(3) - P[j - 1] * P[j + 1].pow(3);
      else
        out = P[j + 2] * P[j].pow(3) - F2_16 * P[j - 1] * P[j + 1].pow(3);
    } else {
      int j = n / 2;
      out = P[j] * (P[j + 2] * P[j - 1] * P[j - 1] - P[j - 2] * P[j + 1] * P[j + 1]);
    }
    if (out.degree() != division_poly_degree(n)) throw math_error("division polynomial degree drift");
    P.push_back(std::move(out));
  }
  slot = next;
  return slot;
}

}  // namespace

DivisionPoly division_poly(const Curve& curve, int m) {
  if (m < 2) throw math_error("division_poly requires m >= 2");
  auto ladder = psi_ladder(curve, m);
  return {m, ladder->psi[static_cast<size_t>(m)]};
}

AbscissaMap abscissa_map(const Curve& curve, int m) {
  if (m < 1) throw math_error("abscissa_map requires m >= 1");
  if (m == 1) return {1, UniPoly::x(), UniPoly::constant(Rational(1))};
  auto ladder = psi_ladder(curve, m + 1);
  const auto& P = ladder->psi;
  UniPoly F = curve.rhs_cubic();
  const auto& pm = P[static_cast<size_t>(m)];
  const auto& pl = P[static_cast<size_t>(m - 1)];
  const auto& pr = P[static_cast<size_t>(m + 1)];
  UniPoly theta, psi_sq;
  if (m % 2 == 1) {
    theta = UniPoly::x() * pm * pm - F * pr * pl * Rational(4);
    psi_sq = pm * pm;
  } else {
    theta = UniPoly::x() * F * pm * pm * Rational(4) - pr * pl;
    psi_sq = F * pm * pm * Rational(4);
  }
  if (theta.degree() != static_cast<long>(m) * m || theta.leading() != 1)
    throw math_error("abscissa map numerator is not monic of degree m^2");
  return {m, std::move(theta), std::move(psi_sq)};
}

UniPoly preimage_poly(const Curve& curve, int m, const Rational& xP) {
  if (m < 1) throw math_error("preimage_poly requires m >= 1");
  AbscissaMap a = abscissa_map(curve, m);
  UniPoly num = a.theta - a.psi_sq * xP;
  auto form = num.primitive_integer_form();
  return UniPoly::from_integer_coeffs(form.coeffs);
}

double mckee_bound(int m) {
  if (m < 2) throw math_error("mckee_bound requires m >= 2");
  const double mm = static_cast<double>(m) * m;
  return (3.0 * mm + 1.0) / 2.0 * std::log(2.0) + mm / 2.0 - 3.0 * std::log(m) -
         std::log(std::numbers::pi);
}

namespace {

// Smallest u with u^4 b and u^6 c integral (substitution x -> x/u^2, y -> y/u^3).
Curve integral_model(const Curve& curve) {
  if (is_integer(curve.b()) && is_integer(curve.c())) return curve;
  BigInt db = curve.b().get_den(), dc = curve.c().get_den();
  BigInt u(1);
  BigInt rem = db * dc;
  BigInt p(2);
  while (rem > 1) {
    if (p * p > rem) p = rem;  // leftover prime
    if (rem % p == 0) {
      long eb = (db % p == 0) ? valuation(db, p) : 0;
      long ec = (dc % p == 0) ? valuation(dc, p) : 0;
      long need = std::max((eb + 3) / 4, (ec + 5) / 6);
      if (need > 0) u *= bigint_pow(p, static_cast<unsigned long>(need));
      while (rem % p == 0) rem /= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  Rational u4 = Rational(bigint_pow(u, 4));
  Rational u6 = Rational(bigint_pow(u, 6));
  return Curve(curve.b() * u4, curve.c() * u6);
}

}  // namespace

double coeff_height_bound(int m, const Curve& curve) {
  if (m < 3) throw math_error("coeff_height_bound requires m >= 3");
  Curve c = integral_model(curve);
  double hb = log_height_rational(c.b()).value;
  double hc = log_height_rational(c.c()).value;
  return static_cast<double>(division_poly_degree(m)) * (mckee_bound(m) + hb + hc);
}

double abscissa_height_bound(int m, const Curve& curve) {
  if (m < 3) throw math_error("abscissa_height_bound requires m >= 3");
  double hb = log_height_rational(curve.b()).value;
  double hc = log_height_rational(curve.c()).value;
  double mm = static_cast<double>(m) * m;
  double k = (m % 2 == 1) ? mm - 1.0 : mm - 4.0;
  return k * k * std::log(m) + k / 2.0 * (hb + hc) + std::log(2.0);
}

}  // namespace divlab
