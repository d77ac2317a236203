#include "divlab/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "divlab/errors.hpp"

namespace divlab {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(size_t deg, const Rational& c) {
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return UniPoly(std::move(v));
}

Rational UniPoly::leading() const {
  if (is_zero()) throw math_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  std::vector<Rational> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * s;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = constant(Rational(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(v));
}

Rational UniPoly::evaluate(const Rational& v) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

BigInt UniPoly::evaluate_integer(const BigInt& v) const {
  BigInt acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].get_den() != 1) throw math_error("evaluate_integer on non-integer polynomial");
    acc = acc * v + coeffs_[i].get_num();
  }
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw math_error("polynomial division by zero");
  UniPoly r = a;
  std::vector<Rational> q(a.coeffs_.size() > b.coeffs_.size() - 1
                              ? a.coeffs_.size() - b.coeffs_.size() + 1
                              : 0,
                          Rational(0));
  Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t shift = static_cast<size_t>(r.degree() - b.degree());
    Rational f = r.leading() / lb;
    q[shift] = f;
    r = r - UniPoly::monomial(shift, f) * b;
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = v;
    v = r;
  }
  if (u.is_zero()) return u;
  return u * (Rational(1) / u.leading());
}

bool UniPoly::divides(const UniPoly& other) const {
  if (is_zero()) return other.is_zero();
  return divmod(other, *this).second.is_zero();
}

bool UniPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

UniPoly::IntegerForm UniPoly::primitive_integer_form() const {
  if (is_zero()) throw math_error("primitive form of zero polynomial");
  BigInt den_lcm(1);
  for (const auto& c : coeffs_) {
    BigInt d = c.get_den();
    BigInt g;
    mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = g;
  }
  std::vector<BigInt> ints(coeffs_.size());
  BigInt content(0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    ints[i] = BigInt(coeffs_[i].get_num()) * (den_lcm / coeffs_[i].get_den());
    BigInt g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    content = g;
  }
  bool flip = ints.back() < 0;
  if (flip) content = -content;
  for (auto& c : ints) c /= content;
  Rational scale = make_rational(content, den_lcm);
  return {scale, std::move(ints)};
}

UniPoly UniPoly::from_integer_coeffs(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) v[i] = Rational(coeffs[i]);
  return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (i == 0 || a != 1) os << to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Fraction-free determinant (Bareiss) of a square integer matrix.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  if (n == 0) return BigInt(1);
  BigInt prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return BigInt(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

}  // namespace

Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  const long df = f.degree(), dg = g.degree();
  if (df == 0) return rational_pow(f.leading(), dg);
  if (dg == 0) return rational_pow(g.leading(), df);

  auto fi = f.primitive_integer_form();
  auto gi = g.primitive_integer_form();

  // Sylvester matrix of the primitive integer parts.
  const size_t n = static_cast<size_t>(df + dg);
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
  for (long row = 0; row < dg; ++row)
    for (long j = 0; j <= df; ++j) m[row][row + j] = fi.coeffs[static_cast<size_t>(df - j)];
  for (long row = 0; row < df; ++row)
    for (long j = 0; j <= dg; ++j) m[dg + row][row + j] = gi.coeffs[static_cast<size_t>(dg - j)];

  BigInt det = bareiss_det(std::move(m));
  // Res(s*F, t*G) = s^{deg G} t^{deg F} Res(F, G)
  return Rational(det) * rational_pow(fi.scale, dg) * rational_pow(gi.scale, df);
}

Rational poly_discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw math_error("degree too small");
  const long d = f.degree();
  Rational res = resultant(f, f.derivative());
  Rational disc = res / f.leading();
  if (((d * (d - 1)) / 2) % 2 != 0) disc = -disc;
  return disc;
}

}  // namespace divlab
