#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "divlab/errors.hpp"

namespace divlab {

// 2x2 matrix over Z/n, entries row-major (a b; c d), always reduced mod n.
// The modulus travels with the value; mixing moduli is an error, never a coercion.
struct Mat2Mod {
  long long n = 1;
  std::array<long long, 4> e{0, 0, 0, 0};

  Mat2Mod() = default;
  Mat2Mod(long long modulus, long long a, long long b, long long c, long long d);

  static Mat2Mod identity(long long modulus);

  bool operator==(const Mat2Mod& o) const { return n == o.n && e == o.e; }
  bool operator<(const Mat2Mod& o) const;  // total order for canonical sets

  std::string str() const;
};

long long mod_reduce(long long v, long long n);

Mat2Mod mat_mul(const Mat2Mod& a, const Mat2Mod& b);
Mat2Mod mat_pow(const Mat2Mod& m, unsigned long long k);
long long mat_det(const Mat2Mod& m);
bool mat_invertible(const Mat2Mod& m);
Mat2Mod mat_inverse(const Mat2Mod& m);  // throws "singular element"
// Least t >= 1 with m^t = Id; throws "singular element" for non-units.
long long mat_order(const Mat2Mod& m, long long cap = 100'000'000LL);

// Matrix action on a column vector over Z/n.
std::array<long long, 2> mat_apply(const Mat2Mod& m, const std::array<long long, 2>& v);

}  // namespace divlab
