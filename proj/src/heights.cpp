#include "divlab/heights.hpp"

#include <algorithm>
#include <cmath>

#include "divlab/errors.hpp"

namespace divlab {

LogHeight log_height_rational(const Rational& q) {
  if (q == 0) return {0.0};
  BigInt n = abs(BigInt(q.get_num()));
  BigInt d = q.get_den();
  return {log_abs(n > d ? n : d)};
}

LogHeight log_height_poly(const UniPoly& f) {
  if (f.is_zero()) throw math_error("height of zero polynomial");
  auto form = f.primitive_integer_form();
  BigInt mx(0);
  for (const auto& c : form.coeffs) mx = std::max(mx, BigInt(abs(c)));
  if (mx <= 1) return {0.0};
  return {log_abs(mx)};
}

double poly_place_height(const UniPoly& f) {
  if (f.is_zero()) throw math_error("height of zero polynomial");
  // Non-archimedean places: max_i |a_i|_p = p^{v_p(lcm of denominators)}.
  BigInt den_lcm(1);
  Rational mx_abs(0);
  for (const auto& c : f.coeffs()) {
    BigInt d = c.get_den();
    BigInt g;
    mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = g;
    Rational a = abs(c);
    if (a > mx_abs) mx_abs = a;
  }
  double h = (den_lcm == 1) ? 0.0 : log_abs(den_lcm);
  return h + log_plus(mx_abs);
}

UniPoly minimal_polynomial(const MultiQuadElement& x) {
  if (x.is_rational())
    return UniPoly(std::vector<Rational>{-x.rational_value(), Rational(1)});
  auto orbit = x.distinct_conjugates();
  // prod (X - c) with tower-valued coefficients; the result must be rational.
  std::vector<MultiQuadElement> poly{MultiQuadElement::from_rational(Rational(1), x.radicands())};
  for (const auto& c : orbit) {
    std::vector<MultiQuadElement> next(poly.size() + 1,
                                       MultiQuadElement::from_rational(Rational(0), x.radicands()));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * c;
    }
    poly = std::move(next);
  }
  std::vector<Rational> coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    if (!poly[i].is_rational()) throw math_error("conjugate product has irrational coefficient");
    coeffs[i] = poly[i].rational_value();
  }
  return UniPoly(std::move(coeffs));
}

namespace {

// Full norm polynomial prod_sigma (X - sigma(x)) of degree 2^k, computed by
// folding conjugate pairs level by level with coefficients projected into the
// shrinking subtower; equals minpoly^(2^k/deg minpoly), which leaves
// Mahler-measure heights unchanged after the 1/2^k normalization.
UniPoly full_norm_poly(const MultiQuadElement& x) {
  std::vector<BigInt> cur_rads = x.radicands();
  std::vector<MultiQuadElement> poly{-x, MultiQuadElement::from_rational(Rational(1), cur_rads)};
  while (!cur_rads.empty()) {
    const unsigned flip = 1u << (cur_rads.size() - 1);
    std::vector<MultiQuadElement> prod(
        2 * poly.size() - 1, MultiQuadElement::from_rational(Rational(0), cur_rads));
    for (size_t i = 0; i < poly.size(); ++i) {
      if (poly[i].is_zero()) continue;
      for (size_t j = 0; j < poly.size(); ++j)
        prod[i + j] = prod[i + j] + poly[i] * poly[j].conjugate(flip);
    }
    // every coefficient is flip-invariant: project to the subtower
    std::vector<BigInt> smaller(cur_rads.begin(), cur_rads.end() - 1);
    const size_t half = size_t{1} << smaller.size();
    std::vector<MultiQuadElement> projected;
    projected.reserve(prod.size());
    for (const auto& c : prod) {
      const auto& coords = c.coords();
      std::vector<Rational> low(coords.begin(), coords.begin() + half);
      for (size_t s = half; s < coords.size(); ++s)
        if (coords[s] != 0) throw math_error("norm fold left an irrational coefficient");
      projected.emplace_back(smaller, std::move(low));
    }
    poly = std::move(projected);
    cur_rads = std::move(smaller);
  }
  std::vector<Rational> coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) coeffs[i] = poly[i].rational_value();
  return UniPoly(std::move(coeffs));
}

}  // namespace

LogHeight log_height_multiquad(const MultiQuadElement& x) {
  if (x.is_rational()) return log_height_rational(x.rational_value());
  UniPoly norm = full_norm_poly(x);
  auto form = norm.primitive_integer_form();
  const double deg = static_cast<double>(norm.degree());
  double acc = log_abs(form.coeffs.back());
  for (const auto& c : x.conjugates()) {
    double a = std::abs(c.numeric());
    if (a > 1.0) acc += std::log(a);
  }
  double h = acc / deg;
  return {h > 0.0 ? h : 0.0};
}

MinPolyBoundReport check_min_poly_bound(const MultiQuadElement& x) {
  MinPolyBoundReport rep;
  rep.h_alpha = log_height_multiquad(x).value;
  rep.h_falpha = poly_place_height(minimal_polynomial(x));
  rep.holds = rep.h_alpha <= rep.h_falpha + std::log(2.0) + 1e-9;
  return rep;
}

}  // namespace divlab
