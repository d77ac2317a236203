#include "divlab/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "divlab/errors.hpp"

namespace divlab {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw math_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad integer literal: " + s);
  }
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt n = parse_bigint(s.substr(0, slash));
    BigInt d = parse_bigint(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return make_rational(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) throw std::invalid_argument("bad decimal literal: " + s);
    BigInt n = parse_bigint(digits);
    BigInt d = bigint_pow(BigInt(10), frac_len);
    return make_rational(n, d);
  }
  return Rational(parse_bigint(s));
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt bigint_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw math_error("zero to negative power");
    Rational inv = make_rational(base.get_den(), base.get_num());
    return rational_pow(inv, -e);
  }
  Rational r(bigint_pow(base.get_num(), static_cast<unsigned long>(e)),
             bigint_pow(base.get_den(), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

double log_abs(const BigInt& n) {
  if (n == 0) throw math_error("log of zero");
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const Rational& q) {
  if (q == 0) throw math_error("log of zero");
  return log_abs(q.get_num()) - log_abs(q.get_den());
}

double log_plus(const Rational& q) {
  if (q == 0) return 0.0;
  double v = log_abs(q);
  return v > 0.0 ? v : 0.0;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt numerator(const Rational& q) { return q.get_num(); }
BigInt denominator(const Rational& q) { return q.get_den(); }

long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw math_error("valuation of zero");
  if (p < 2) throw math_error("valuation base must be >= 2");
  BigInt m = abs(n);
  long v = 0;
  BigInt q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

long valuation(const Rational& q, const BigInt& p) {
  if (q == 0) throw math_error("valuation of zero");
  return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
  }
  return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  auto n = exact_sqrt(BigInt(q.get_num()));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(BigInt(q.get_den()));
  if (!d) return std::nullopt;
  return make_rational(*n, *d);
}

namespace {
constexpr long long kFactorWorkCap = 40'000'000;  // trial divisions
}

BigInt squarefree_part(const BigInt& n) {
  if (n == 0) throw math_error("squarefree part of zero");
  BigInt m = abs(n);
  BigInt part = (n < 0) ? BigInt(-1) : BigInt(1);
  long long steps = 0;
  BigInt d(2);
  while (d * d <= m) {
    if (++steps > kFactorWorkCap)
      throw cap_exceeded("squarefree_part: operand too large to factor");
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (e % 2 == 1) part *= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (m > 1) part *= m;  // leftover prime
  return part;
}

std::vector<BigInt> factor_squarefree(const BigInt& n, bool* negative) {
  if (n == 0) throw math_error("factor of zero");
  BigInt m = abs(n);
  if (negative) *negative = (n < 0);
  std::vector<BigInt> primes;
  long long steps = 0;
  BigInt d(2);
  while (d * d <= m) {
    if (++steps > kFactorWorkCap)
      throw cap_exceeded("factor_squarefree: operand too large to factor");
    if (m % d == 0) {
      primes.push_back(d);
      m /= d;
      if (m % d == 0) throw math_error("factor_squarefree: input not squarefree");
    }
    d += (d == 2) ? 1 : 2;
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

std::vector<long long> primes_up_to(long long limit) {
  std::vector<long long> out;
  if (limit < 2) return out;
  if (limit > 2'000'000'000LL) throw cap_exceeded("prime sieve limit too large");
  std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
  for (long long i = 2; i * i <= limit; ++i)
    if (!comp[static_cast<size_t>(i)])
      for (long long j = i * i; j <= limit; j += i) comp[static_cast<size_t>(j)] = true;
  for (long long i = 2; i <= limit; ++i)
    if (!comp[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace divlab
