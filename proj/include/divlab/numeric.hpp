#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace divlab {

using BigInt = mpz_class;
using Rational = mpq_class;

// mpz_class has no long long constructor; long is 64-bit on this platform.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

// Canonical rational with positive denominator, gcd(num, den) = 1.
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "-171", "3/2", "1.25" (exact decimal). Throws std::invalid_argument.
Rational parse_rational(const std::string& s);
BigInt parse_bigint(const std::string& s);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);  // "n" or "n/d"

BigInt bigint_pow(const BigInt& base, unsigned long e);
Rational rational_pow(const Rational& base, long e);

// Natural log of |n|; exact to double precision for any operand size. n != 0.
double log_abs(const BigInt& n);
double log_abs(const Rational& q);
// log^+ |q| = max(0, log |q|), with log^+ 0 = 0.
double log_plus(const Rational& q);

bool is_integer(const Rational& q);
BigInt numerator(const Rational& q);
BigInt denominator(const Rational& q);

// p-adic valuation of n (n != 0), p >= 2.
long valuation(const BigInt& n, const BigInt& p);
long valuation(const Rational& q, const BigInt& p);

std::optional<BigInt> exact_sqrt(const BigInt& n);       // nullopt unless perfect square >= 0
std::optional<Rational> exact_sqrt(const Rational& q);

// n = part * square with part squarefree; sign carried by part. Trial division,
// refuses |n| beyond a fixed workload cap.
BigInt squarefree_part(const BigInt& n);

// Prime factors of a squarefree integer, ascending; sign reported separately.
std::vector<BigInt> factor_squarefree(const BigInt& n, bool* negative);

std::vector<long long> primes_up_to(long long limit);

}  // namespace divlab
