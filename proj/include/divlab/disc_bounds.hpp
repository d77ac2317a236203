#pragma once

#include <optional>
#include <vector>

#include "divlab/division_poly.hpp"
#include "divlab/numeric.hpp"

namespace divlab {

inline constexpr long long kChebotarevExponent = 12577;

// Delta = -16(4b^3 + 27c^2); nonzero by Curve construction.
Rational curve_discriminant(const Curve& curve);

// 10 log m + 3 h(b) + 2 h(c); dominates h(Delta).
double h_delta_bound(const Curve& curve, int m);  // m >= 3

// Exact discriminant of the division polynomial Psi_m in closed form:
//  odd m:  (-1)^{(m-1)/2} m^{(m^2-3)/2} Delta^{(m^2-1)(m^2-3)/24}
//  even m: (-1)^{(m-2)/2} 16 m^{(m^2-12)/2} Delta^{(m^2-4)(m^2-6)/24}
// (even case restated for the 2y-removed normalization of Psi_m).
Rational schmidt_discriminant(const Curve& curve, int m);  // m >= 3, integral curve

// The classical closed form for the even-m polynomial that keeps the 2-torsion
// cubic factor, i.e. disc(2 (x^3+bx+c) Psi_m):
//   (-1)^{(m-2)/2} m^{m^2/2} 2^{2-m^2} Delta^{m^2(m^2+2)/24}
Rational schmidt_discriminant_with_two_torsion(const Curve& curve, int m);  // even m >= 4

// B(m,b,c):
//  odd m:  5 (m^2-1)^3 (m^2-3) (log m + h(b) + h(c))
//  even m: 5 (m^2-4)^3 (m^2-6) (log m + h(b) + h(c))
double B_bound(const Curve& curve, int m);  // m >= 3

// 12577 * B(m,b,c): cap on log v for the sufficient place set.
double prime_budget(const Curve& curve, int m);

// Informational alternative form (known-inconsistent with B_bound; kept verbatim):
//  odd m:  (m^2-1)^3 (m-3) log(m^5 |bc|)
//  even m: (m^2-4)^3 (m-6) log(m^5 |bc|)
double elegant_bound(const Curve& curve, int m);  // b, c nonzero integers

struct BoundReport {
  int m = 0;
  double h_b = 0.0, h_c = 0.0;
  double h_delta_bound = 0.0;
  double disc_pair_bound = 0.0;  // bound on h(D_{F1F2/K})
  double norm_bound = 0.0;       // bound on h(N_{F1F2/K}(D_{L/F1F2}))
  double B = 0.0;
  double prime_budget = 0.0;
  std::optional<double> elegant_form;
  bool chain_holds = false;  // 4*disc_pair_bound + norm_bound <= B
};

BoundReport bound_pipeline(const Curve& curve, int m);  // m >= 3

// Primes v with log v <= log_cap; refused above hard_cap.
std::vector<long long> primes_within_log_budget(double log_cap, double hard_cap = 30.0);

}  // namespace divlab
