#include "divlab/disc_bounds.hpp"

#include <cmath>

#include "divlab/errors.hpp"
#include "divlab/heights.hpp"

namespace divlab {

Rational curve_discriminant(const Curve& curve) {
  return Rational(-16) *
         (Rational(4) * rational_pow(curve.b(), 3) + Rational(27) * rational_pow(curve.c(), 2));
}

double h_delta_bound(const Curve& curve, int m) {
  if (m < 3) throw math_error("h_delta_bound requires m >= 3");
  double hb = log_height_rational(curve.b()).value;
  double hc = log_height_rational(curve.c()).value;
  return 10.0 * std::log(m) + 3.0 * hb + 2.0 * hc;
}

namespace {
void require_integral(const Curve& curve, const char* who) {
  if (!is_integer(curve.b()) || !is_integer(curve.c()))
    throw math_error(std::string(who) + " requires an integral curve");
}
}  // namespace

Rational schmidt_discriminant(const Curve& curve, int m) {
  if (m < 3) throw math_error("schmidt_discriminant requires m >= 3");
  require_integral(curve, "schmidt_discriminant");
  Rational delta = curve_discriminant(curve);
  const long mm = static_cast<long>(m) * m;
  if (m % 2 == 1) {
    Rational r = Rational(bigint_pow(BigInt(m), static_cast<unsigned long>((mm - 3) / 2))) *
                 rational_pow(delta, (mm - 1) * (mm - 3) / 24);
    return ((m - 1) / 2) % 2 == 1 ? -r : r;
  }
  Rational r = Rational(16) *
               Rational(bigint_pow(BigInt(m), static_cast<unsigned long>((mm - 12) / 2))) *
               rational_pow(delta, (mm - 4) * (mm - 6) / 24);
  return ((m - 2) / 2) % 2 == 1 ? -r : r;
}

Rational schmidt_discriminant_with_two_torsion(const Curve& curve, int m) {
  if (m < 4 || m % 2 != 0)
    throw math_error("two-torsion-inclusive form is defined for even m >= 4");
  require_integral(curve, "schmidt_discriminant_with_two_torsion");
  Rational delta = curve_discriminant(curve);
  const long mm = static_cast<long>(m) * m;
  Rational r = Rational(bigint_pow(BigInt(m), static_cast<unsigned long>(mm / 2))) *
               rational_pow(Rational(2), 2 - mm) * rational_pow(delta, mm * (mm + 2) / 24);
  return ((m - 2) / 2) % 2 == 1 ? -r : r;
}

double B_bound(const Curve& curve, int m) {
  if (m < 3) throw math_error("m >= 3 required");
  double hb = log_height_rational(curve.b()).value;
  double hc = log_height_rational(curve.c()).value;
  double mm = static_cast<double>(m) * m;
  double k = (m % 2 == 1) ? mm - 1.0 : mm - 4.0;
  double l = (m % 2 == 1) ? mm - 3.0 : mm - 6.0;
  return 5.0 * k * k * k * l * (std::log(m) + hb + hc);
}

double prime_budget(const Curve& curve, int m) {
  return static_cast<double>(kChebotarevExponent) * B_bound(curve, m);
}

double elegant_bound(const Curve& curve, int m) {
  if (m < 3) throw math_error("m >= 3 required");
  if (!is_integer(curve.b()) || !is_integer(curve.c()) || curve.b() == 0 || curve.c() == 0)
    throw math_error("elegant form undefined");
  Rational bc = abs(curve.b() * curve.c());
  double mm = static_cast<double>(m) * m;
  double k = (m % 2 == 1) ? mm - 1.0 : mm - 4.0;
  double l = (m % 2 == 1) ? m - 3.0 : m - 6.0;
  double logarg = 5.0 * std::log(m) + log_abs(bc);
  return k * k * k * l * logarg;
}

BoundReport bound_pipeline(const Curve& curve, int m) {
  if (m < 3) throw math_error("m >= 3 required");
  BoundReport rep;
  rep.m = m;
  rep.h_b = log_height_rational(curve.b()).value;
  rep.h_c = log_height_rational(curve.c()).value;
  rep.h_delta_bound = h_delta_bound(curve, m);
  const double logm = std::log(m);
  const double mm = static_cast<double>(m) * m;
  if (m % 2 == 1) {
    rep.disc_pair_bound =
        (mm - 1.0) * ((mm - 3.0) / 2.0 * logm + (mm - 1.0) * (mm - 3.0) / 24.0 * rep.h_delta_bound);
    rep.norm_bound = 4.5 * std::pow(mm - 1.0, 3) * (mm - 3.0) * (logm + rep.h_b + rep.h_c);
  } else {
    rep.disc_pair_bound =
        (mm - 4.0) * (mm / 2.0 * logm + (mm - 2.0) * std::log(2.0) +
                      mm * (mm + 2.0) / 24.0 * rep.h_delta_bound);
    rep.norm_bound = 4.5 * std::pow(mm - 4.0, 3) * (mm - 6.0) * (logm + rep.h_b + rep.h_c);
  }
  rep.B = B_bound(curve, m);
  rep.prime_budget = static_cast<double>(kChebotarevExponent) * rep.B;
  rep.chain_holds = 4.0 * rep.disc_pair_bound + rep.norm_bound <= rep.B * (1.0 + 1e-12);
  if (is_integer(curve.b()) && is_integer(curve.c()) && curve.b() != 0 && curve.c() != 0)
    rep.elegant_form = elegant_bound(curve, m);
  if (!rep.chain_holds) throw math_error("bound pipeline chain violated");
  return rep;
}

std::vector<long long> primes_within_log_budget(double log_cap, double hard_cap) {
  if (log_cap > hard_cap)
    throw cap_exceeded("prime budget exceeds enumeration cap; report the budget instead");
  if (log_cap < std::log(2.0)) return {};
  double bound = std::exp(log_cap);
  if (bound > 2.0e9) throw cap_exceeded("prime budget exceeds enumeration cap");
  return primes_up_to(static_cast<long long>(bound));
}

}  // namespace divlab
