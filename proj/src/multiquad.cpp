#include "divlab/multiquad.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "divlab/errors.hpp"

namespace divlab {

void validate_radicands(const std::vector<BigInt>& radicands) {
  if (radicands.size() > 16) throw cap_exceeded("tower rank too large");
  for (size_t i = 0; i < radicands.size(); ++i) {
    const BigInt& d = radicands[i];
    if (d == 0 || d == 1) throw math_error("radicand must not be 0 or 1");
    if (squarefree_part(d) != d) throw math_error("radicand must be squarefree");
    if (i > 0 && !(radicands[i - 1] < d)) throw math_error("radicands must be strictly ascending");
    for (size_t j = 0; j < i; ++j) {
      BigInt g;
      BigInt ai = abs(radicands[i]), aj = abs(radicands[j]);
      mpz_gcd(g.get_mpz_t(), ai.get_mpz_t(), aj.get_mpz_t());
      if (g != 1) throw math_error("radicands must be pairwise coprime");
    }
  }
}

MultiQuadElement::MultiQuadElement() : coords_(1, Rational(0)) {}

MultiQuadElement::MultiQuadElement(std::vector<BigInt> radicands, std::vector<Rational> coords)
    : radicands_(std::move(radicands)), coords_(std::move(coords)) {
  validate_radicands(radicands_);
  if (coords_.size() != (size_t{1} << radicands_.size()))
    throw math_error("coordinate vector size mismatch");
}

MultiQuadElement MultiQuadElement::from_rational(const Rational& q, std::vector<BigInt> radicands) {
  std::vector<Rational> coords(size_t{1} << radicands.size(), Rational(0));
  coords[0] = q;
  return MultiQuadElement(std::move(radicands), std::move(coords));
}

MultiQuadElement MultiQuadElement::radical(std::vector<BigInt> radicands, unsigned mask) {
  std::vector<Rational> coords(size_t{1} << radicands.size(), Rational(0));
  if (mask >= coords.size()) throw math_error("radical mask out of range");
  coords[mask] = Rational(1);
  return MultiQuadElement(std::move(radicands), std::move(coords));
}

bool MultiQuadElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool MultiQuadElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational MultiQuadElement::rational_value() const {
  if (!is_rational()) throw math_error("element is irrational");
  return coords_[0];
}

MultiQuadElement MultiQuadElement::operator-() const {
  MultiQuadElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

namespace {
void check_tower(const MultiQuadElement& a, const MultiQuadElement& b) {
  if (!a.same_tower(b)) throw math_error("incompatible towers");
}
}  // namespace

MultiQuadElement MultiQuadElement::operator+(const MultiQuadElement& o) const {
  check_tower(*this, o);
  MultiQuadElement r = *this;
  for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

MultiQuadElement MultiQuadElement::operator-(const MultiQuadElement& o) const {
  return *this + (-o);
}

MultiQuadElement MultiQuadElement::operator*(const MultiQuadElement& o) const {
  check_tower(*this, o);
  const size_t n = coords_.size();
  std::vector<Rational> out(n, Rational(0));
  for (size_t s = 0; s < n; ++s) {
    if (coords_[s] == 0) continue;
    for (size_t t = 0; t < n; ++t) {
      if (o.coords_[t] == 0) continue;
      // sqrt(S) * sqrt(T) = prod_{i in S&T} d_i * sqrt(S^T)
      Rational prod = coords_[s] * o.coords_[t];
      size_t common = s & t;
      for (size_t i = 0; common; ++i, common >>= 1)
        if (common & 1u) prod *= Rational(radicands_[i]);
      out[s ^ t] += prod;
    }
  }
  MultiQuadElement r = *this;
  r.coords_ = std::move(out);
  return r;
}

MultiQuadElement MultiQuadElement::operator*(const Rational& sc) const {
  MultiQuadElement r = *this;
  for (auto& c : r.coords_) c *= sc;
  return r;
}

bool MultiQuadElement::operator==(const MultiQuadElement& o) const {
  return radicands_ == o.radicands_ && coords_ == o.coords_;
}

namespace {

// Inverse in the rank-k subalgebra spanned by the low 2^k coordinates.
std::vector<Rational> inverse_rec(const std::vector<BigInt>& rads,
                                  const std::vector<Rational>& v, size_t k) {
  if (k == 0) {
    if (v[0] == 0) throw math_error("division by zero tower element");
    return {Rational(1) / v[0]};
  }
  const size_t half = size_t{1} << (k - 1);
  std::vector<Rational> a(v.begin(), v.begin() + half);
  std::vector<Rational> b(v.begin() + half, v.begin() + 2 * half);
  // v = a + b*sqrt(d); norm = a^2 - d*b^2 in the subtower.
  auto sub_mul = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> out(half, Rational(0));
    for (size_t s = 0; s < half; ++s) {
      if (x[s] == 0) continue;
      for (size_t t = 0; t < half; ++t) {
        if (y[t] == 0) continue;
        Rational prod = x[s] * y[t];
        size_t common = s & t;
        for (size_t i = 0; common; ++i, common >>= 1)
          if (common & 1u) prod *= Rational(rads[i]);
        out[s ^ t] += prod;
      }
    }
    return out;
  };
  const Rational d(rads[k - 1]);
  std::vector<Rational> norm = sub_mul(a, a);
  std::vector<Rational> bb = sub_mul(b, b);
  for (size_t i = 0; i < half; ++i) norm[i] -= d * bb[i];
  bool zero = true;
  for (const auto& c : norm)
    if (c != 0) zero = false;
  if (zero) throw math_error("division by zero tower element");
  std::vector<Rational> ninv = inverse_rec(rads, norm, k - 1);
  std::vector<Rational> ra = sub_mul(a, ninv);
  std::vector<Rational> rb = sub_mul(b, ninv);
  std::vector<Rational> out(2 * half);
  for (size_t i = 0; i < half; ++i) {
    out[i] = ra[i];
    out[half + i] = -rb[i];
  }
  return out;
}

}  // namespace

MultiQuadElement MultiQuadElement::inverse() const {
  if (is_zero()) throw math_error("division by zero tower element");
  MultiQuadElement r = *this;
  r.coords_ = inverse_rec(radicands_, coords_, radicands_.size());
  return r;
}

MultiQuadElement MultiQuadElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  MultiQuadElement acc = from_rational(Rational(1), radicands_);
  MultiQuadElement base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1ul) acc = acc * base;
    base = base * base;
    k >>= 1ul;
  }
  return acc;
}

MultiQuadElement MultiQuadElement::conjugate(unsigned flip_mask) const {
  MultiQuadElement r = *this;
  for (size_t s = 0; s < coords_.size(); ++s)
    if (std::popcount(static_cast<unsigned>(s) & flip_mask) % 2 == 1) r.coords_[s] = -r.coords_[s];
  return r;
}

std::vector<MultiQuadElement> MultiQuadElement::conjugates() const {
  std::vector<MultiQuadElement> out;
  const unsigned total = 1u << radicands_.size();
  out.reserve(total);
  for (unsigned m = 0; m < total; ++m) out.push_back(conjugate(m));
  return out;
}

std::vector<MultiQuadElement> MultiQuadElement::distinct_conjugates() const {
  std::vector<MultiQuadElement> out;
  for (const auto& c : conjugates()) {
    bool seen = false;
    for (const auto& kept : out)
      if (kept == c) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(c);
  }
  return out;
}

MultiQuadElement MultiQuadElement::promote(const std::vector<BigInt>& bigger) const {
  validate_radicands(bigger);
  std::vector<size_t> pos(radicands_.size());
  for (size_t i = 0; i < radicands_.size(); ++i) {
    auto it = std::find(bigger.begin(), bigger.end(), radicands_[i]);
    if (it == bigger.end()) throw math_error("promote target is not a supertower");
    pos[i] = static_cast<size_t>(it - bigger.begin());
  }
  std::vector<Rational> coords(size_t{1} << bigger.size(), Rational(0));
  for (size_t s = 0; s < coords_.size(); ++s) {
    size_t target = 0;
    for (size_t i = 0; i < radicands_.size(); ++i)
      if (s & (size_t{1} << i)) target |= size_t{1} << pos[i];
    coords[target] = coords_[s];
  }
  return MultiQuadElement(bigger, std::move(coords));
}

std::complex<double> MultiQuadElement::numeric() const {
  std::vector<std::complex<double>> roots(radicands_.size());
  for (size_t i = 0; i < radicands_.size(); ++i) {
    double d = radicands_[i].get_d();
    roots[i] = d >= 0 ? std::complex<double>(std::sqrt(d), 0.0)
                      : std::complex<double>(0.0, std::sqrt(-d));
  }
  std::complex<double> acc(0.0, 0.0);
  for (size_t s = 0; s < coords_.size(); ++s) {
    if (coords_[s] == 0) continue;
    std::complex<double> term(coords_[s].get_d(), 0.0);
    for (size_t i = 0; i < radicands_.size(); ++i)
      if (s & (size_t{1} << i)) term *= roots[i];
    acc += term;
  }
  return acc;
}

std::string MultiQuadElement::str() const {
  bool first = true;
  std::ostringstream os;
  for (size_t s = 0; s < coords_.size(); ++s) {
    if (coords_[s] == 0) continue;
    Rational c = coords_[s];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (s == 0) {
      os << to_string(a);
    } else {
      BigInt rad(1);
      for (size_t i = 0; i < radicands_.size(); ++i)
        if (s & (size_t{1} << i)) rad *= radicands_[i];
      if (a != 1) os << to_string(a) << "*";
      os << "sqrt(" << to_string(rad) << ")";
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

MultiQuadElement sqrt_in_tower(const Rational& q, const std::vector<BigInt>& radicands) {
  if (q == 0) return MultiQuadElement::from_rational(Rational(0), radicands);
  // q = s * w^2, s squarefree (numerator * denominator trick keeps w rational).
  BigInt nd = BigInt(q.get_num()) * q.get_den();
  BigInt s = squarefree_part(nd);
  Rational w2 = q / Rational(s);
  auto w = exact_sqrt(w2);
  if (!w) throw math_error("internal: non-square cofactor");
  bool neg = false;
  std::vector<BigInt> primes = factor_squarefree(s, &neg);
  unsigned mask = 0;
  auto need = [&](const BigInt& r) {
    auto it = std::find(radicands.begin(), radicands.end(), r);
    if (it == radicands.end())
      throw math_error("sqrt not representable in tower: needs radicand " + to_string(r));
    mask |= 1u << static_cast<unsigned>(it - radicands.begin());
  };
  if (neg) need(BigInt(-1));
  for (const auto& p : primes) need(p);
  return MultiQuadElement::radical(radicands, mask) * (*w);
}

std::vector<BigInt> tower_for_sqrts(const std::vector<Rational>& values) {
  std::vector<BigInt> rads;
  bool want_i = false;
  for (const auto& q : values) {
    if (q == 0) continue;
    BigInt s = squarefree_part(BigInt(q.get_num()) * q.get_den());
    bool neg = false;
    for (const auto& p : factor_squarefree(s, &neg))
      if (std::find(rads.begin(), rads.end(), p) == rads.end()) rads.push_back(p);
    want_i = want_i || neg;
  }
  if (want_i) rads.push_back(BigInt(-1));
  std::sort(rads.begin(), rads.end());
  return rads;
}

MultiQuadElement mq_mul(const MultiQuadElement& a, const MultiQuadElement& b) { return a * b; }
MultiQuadElement mq_add(const MultiQuadElement& a, const MultiQuadElement& b) { return a + b; }

}  // namespace divlab
