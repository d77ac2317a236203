#include "divlab/mat2mod.hpp"

#include <numeric>
#include <sstream>

namespace divlab {

long long mod_reduce(long long v, long long n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}

Mat2Mod::Mat2Mod(long long modulus, long long a, long long b, long long c, long long d) : n(modulus) {
  if (modulus < 1) throw math_error("modulus must be positive");
  if (modulus > (1LL << 30)) throw cap_exceeded("modulus too large");
  e = {mod_reduce(a, n), mod_reduce(b, n), mod_reduce(c, n), mod_reduce(d, n)};
}

Mat2Mod Mat2Mod::identity(long long modulus) { return Mat2Mod(modulus, 1, 0, 0, 1); }

bool Mat2Mod::operator<(const Mat2Mod& o) const {
  if (n != o.n) return n < o.n;
  return e < o.e;
}

std::string Mat2Mod::str() const {
  std::ostringstream os;
  os << "[[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3] << "]] mod " << n;
  return os.str();
}

namespace {
void check_same_modulus(const Mat2Mod& a, const Mat2Mod& b) {
  if (a.n != b.n) throw math_error("mixed moduli");
}

long long mod_inv(long long a, long long n) {
  long long t = 0, new_t = 1, r = n, new_r = mod_reduce(a, n);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw math_error("singular element");
  return mod_reduce(t, n);
}
}  // namespace

Mat2Mod mat_mul(const Mat2Mod& a, const Mat2Mod& b) {
  check_same_modulus(a, b);
  const long long n = a.n;
  return Mat2Mod(n, a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                 a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]);
}

Mat2Mod mat_pow(const Mat2Mod& m, unsigned long long k) {
  Mat2Mod r = Mat2Mod::identity(m.n);
  Mat2Mod base = m;
  while (k > 0) {
    if (k & 1ull) r = mat_mul(r, base);
    base = mat_mul(base, base);
    k >>= 1ull;
  }
  return r;
}

long long mat_det(const Mat2Mod& m) { return mod_reduce(m.e[0] * m.e[3] - m.e[1] * m.e[2], m.n); }

bool mat_invertible(const Mat2Mod& m) { return std::gcd(mat_det(m), m.n) == 1; }

Mat2Mod mat_inverse(const Mat2Mod& m) {
  long long di = mod_inv(mat_det(m), m.n);
  return Mat2Mod(m.n, di * m.e[3], -di * m.e[1], -di * m.e[2], di * m.e[0]);
}

long long mat_order(const Mat2Mod& m, long long cap) {
  if (!mat_invertible(m)) throw math_error("singular element");
  Mat2Mod id = Mat2Mod::identity(m.n);
  Mat2Mod acc = m;
  long long t = 1;
  while (!(acc == id)) {
    acc = mat_mul(acc, m);
    if (++t > cap) throw cap_exceeded("mat_order cap exceeded");
  }
  return t;
}

std::array<long long, 2> mat_apply(const Mat2Mod& m, const std::array<long long, 2>& v) {
  return {mod_reduce(m.e[0] * v[0] + m.e[1] * v[1], m.n),
          mod_reduce(m.e[2] * v[0] + m.e[3] * v[1], m.n)};
}

}  // namespace divlab
