#include "divlab/padic.hpp"

#include <algorithm>
#include <cmath>

#include "divlab/errors.hpp"

namespace divlab {

namespace {

constexpr long kPrecisionCap = 1L << 14;

using ZPoly = std::vector<BigInt>;  // ascending coefficients

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ZPoly zpoly_from(const UniPoly& f) { return f.primitive_integer_form().coeffs; }

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {BigInt(0)};
  ZPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<long>(i);
  return d;
}

BigInt eval(const ZPoly& f, const BigInt& a) {
  BigInt acc(0);
  for (size_t i = f.size(); i-- > 0;) acc = acc * a + f[i];
  return acc;
}

long long eval_mod(const std::vector<long long>& fmod, long long a, long long p) {
  long long acc = 0;
  for (size_t i = fmod.size(); i-- > 0;) acc = (acc * a + fmod[i]) % p;
  return acc;
}

std::vector<long long> reduce_mod(const ZPoly& f, long long p) {
  std::vector<long long> out(f.size());
  BigInt bp = to_bigint(p);
  for (size_t i = 0; i < f.size(); ++i) {
    BigInt r = f[i] % bp;
    if (r < 0) r += bp;
    out[i] = r.get_si();
  }
  return out;
}

// Synthetic division by (x - a); returns quotient, sets *rem = f(a).
ZPoly horner_divide(const ZPoly& f, const BigInt& a, BigInt* rem) {
  const size_t d = f.size() - 1;
  ZPoly q(d);
  BigInt b = f[d];
  for (size_t i = d; i-- > 0;) {
    q[i] = b;
    b = f[i] + a * b;
  }
  *rem = b;
  return q;
}

// G(x) = F(a + p x) with the full p-power content removed.
ZPoly shift_scale(const ZPoly& f, long long a, long long p) {
  const size_t n = f.size();
  ZPoly work = f;
  ZPoly taylor;
  taylor.reserve(n);
  BigInt ba = to_bigint(a);
  while (!work.empty()) {
    BigInt rem;
    if (work.size() == 1) {
      taylor.push_back(work[0]);
      break;
    }
    work = horner_divide(work, ba, &rem);
    taylor.push_back(rem);
  }
  BigInt bp = to_bigint(p), pk(1);
  ZPoly g(taylor.size());
  for (size_t k = 0; k < taylor.size(); ++k) {
    g[k] = taylor[k] * pk;
    pk *= bp;
  }
  long v = -1;
  for (const auto& c : g)
    if (c != 0) {
      long vc = valuation(c, bp);
      v = (v < 0) ? vc : std::min(v, vc);
    }
  if (v > 0) {
    BigInt div = bigint_pow(bp, static_cast<unsigned long>(v));
    for (auto& c : g) c /= div;
  }
  return g;
}

struct FoundRoot {
  bool exact = false;
  BigInt value;      // exact root, or residue mod p^precision
  long precision = 0;
  long depth = 0;    // recursion depth where the branch resolved
};

// Newton-lift a Hensel witness (v(f(a)) > 2 v(f'(a)) = 2t) to precision K.
BigInt hensel_lift(const ZPoly& f, const ZPoly& fd, long long p, BigInt a, long t, long K) {
  BigInt bp = to_bigint(p);
  BigInt mod = bigint_pow(bp, static_cast<unsigned long>(K + 2 * t + 4));
  BigInt pt = bigint_pow(bp, static_cast<unsigned long>(t));
  for (int iter = 0; iter < 128; ++iter) {
    BigInt fa = eval(f, a) % mod;
    if (fa < 0) fa += mod;
    if (fa == 0) break;
    if (valuation(fa, bp) >= K + 2 * t) break;
    BigInt u = eval(fd, a) / pt;  // unit mod p
    BigInt ui;
    if (mpz_invert(ui.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw math_error("hensel lift: unit inversion failed");
    a = (a - (fa / pt) * ui) % mod;
    if (a < 0) a += mod;
  }
  BigInt modK = bigint_pow(bp, static_cast<unsigned long>(K));
  a %= modK;
  if (a < 0) a += modK;
  return a;
}

constexpr long kInfValuation = 1L << 28;

// Shared recursive core over Z_p. decide mode stops at the first root; collect
// mode gathers every root branch at (roughly) target precision.
class RootSearch {
 public:
  RootSearch(long long p, long depth_cap, bool collect, long target_prec)
      : p_(p), depth_cap_(depth_cap), collect_(collect), target_prec_(target_prec) {}

  std::vector<FoundRoot> roots;

  bool run(const ZPoly& f, long depth) {
    if (depth > depth_cap_) throw cap_exceeded("p-adic refinement depth cap exceeded");
    auto fmod = reduce_mod(f, p_);
    bool any = false;
    for (long long a = 0; a < p_; ++a) {
      if (eval_mod(fmod, a, p_) != 0) continue;
      ZPoly cur = f;
      BigInt ba = to_bigint(a);
      BigInt fa = eval(cur, ba);
      while (fa == 0 && cur.size() > 1) {
        FoundRoot r;
        r.exact = true;
        r.value = ba;
        r.depth = depth;
        roots.push_back(r);
        any = true;
        if (!collect_) return true;
        BigInt rem;
        cur = horner_divide(cur, ba, &rem);
        if (cur.size() <= 1) break;
        fa = eval(cur, ba);
      }
      if (cur.size() <= 1 || fa == 0) continue;
      if (fa % to_bigint(p_) != 0) continue;  // branch vanished after exact division
      ZPoly curd = derivative(cur);
      BigInt fda = eval(curd, ba);
      long s = valuation(fa, to_bigint(p_));
      long t = (fda == 0) ? kInfValuation : valuation(fda, to_bigint(p_));
      if (s > 2 * t) {
        long K = std::max<long>(2 * t + 3, target_prec_);
        if (K > kPrecisionCap) throw cap_exceeded("p-adic precision cap exceeded");
        FoundRoot r;
        r.exact = false;
        r.value = hensel_lift(cur, curd, p_, ba, t, K);
        r.precision = K;
        r.depth = depth;
        roots.push_back(std::move(r));
        any = true;
        if (!collect_) return true;
      } else {
        ZPoly g = shift_scale(cur, a, p_);
        RootSearch child(p_, depth_cap_, collect_, std::max<long>(target_prec_ - 1, 8));
        bool child_any = child.run(g, depth + 1);
        if (child_any) {
          any = true;
          for (auto& r : child.roots) {
            FoundRoot lifted = std::move(r);
            lifted.value = ba + to_bigint(p_) * lifted.value;
            if (!lifted.exact) lifted.precision += 1;
            roots.push_back(std::move(lifted));
          }
          if (!collect_) return true;
        }
      }
    }
    return any;
  }

 private:
  long long p_;
  long depth_cap_;
  bool collect_;
  long target_prec_;
};

// Squarefree part over Q (same Z_p roots), as a primitive integer polynomial.
ZPoly squarefree_zpoly(const UniPoly& f) {
  UniPoly g = UniPoly::gcd(f, f.derivative());
  if (g.degree() >= 1) return zpoly_from(UniPoly::divmod(f, g).first);
  return zpoly_from(f);
}

long depth_budget(const ZPoly& sf, long long p) {
  UniPoly f = UniPoly::from_integer_coeffs(sf);
  if (f.degree() < 1) return 1;
  Rational disc = poly_discriminant(f);
  long vd = (disc == 0) ? 0 : valuation(BigInt(disc.get_num()), to_bigint(p));
  return std::min<long>(vd + f.degree() + 8, kPrecisionCap);
}

std::optional<FoundRoot> decide_zp(const ZPoly& sf, long long p) {
  RootSearch search(p, depth_budget(sf, p), /*collect=*/false, /*target_prec=*/4);
  if (search.run(sf, 0)) return search.roots.front();
  return std::nullopt;
}

RootReport make_report(long long p, const std::optional<FoundRoot>& root) {
  RootReport rep;
  rep.prime = p;
  if (root) {
    rep.exists = true;
    rep.witness = root->value;
    rep.precision = root->exact ? 0 : root->precision;
    rep.witness_exact = root->exact;
    rep.certificate = (root->depth == 0) ? RootCertificate::SimpleRootHensel
                                         : RootCertificate::RecursiveRefinement;
  }
  return rep;
}

ZPoly reverse_zpoly(const ZPoly& f) {
  ZPoly r(f.rbegin(), f.rend());
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace

std::string certificate_name(RootCertificate c) {
  switch (c) {
    case RootCertificate::SimpleRootHensel: return "simple-root-hensel";
    case RootCertificate::RecursiveRefinement: return "recursive-refinement";
    case RootCertificate::ExhaustedNoRoot: return "exhausted-no-root";
  }
  return "?";
}

std::string mode_name(LocalTestMode m) {
  return m == LocalTestMode::Abscissa ? "abscissa" : "full";
}

RootReport zp_root_exists(const UniPoly& f, long long p) {
  if (f.is_zero()) throw math_error("zero polynomial");
  if (!is_prime_ll(p)) throw math_error("p must be prime");
  if (f.degree() == 0) return make_report(p, std::nullopt);
  return make_report(p, decide_zp(squarefree_zpoly(f), p));
}

RootReport qp_root_exists(const UniPoly& f, long long p) {
  if (f.is_zero()) throw math_error("zero polynomial");
  if (!is_prime_ll(p)) throw math_error("p must be prime");
  if (f.degree() == 0) return make_report(p, std::nullopt);
  if (f.coeff(0) == 0) {
    FoundRoot r;
    r.exact = true;
    r.value = 0;
    return make_report(p, r);
  }
  RootReport direct = zp_root_exists(f, p);
  if (direct.exists) return direct;
  ZPoly sf = squarefree_zpoly(f);
  // Negative-valuation roots need p | leading coefficient.
  if (sf.back() % to_bigint(p) == 0) {
    auto root = decide_zp(reverse_zpoly(sf), p);
    if (root) {
      RootReport rep = make_report(p, root);
      rep.via_reversal = true;
      return rep;
    }
  }
  return make_report(p, std::nullopt);
}

bool point_on_curve(const Curve& curve, const Rational& x, const Rational& y) {
  return y * y == rational_pow(x, 3) + curve.b() * x + curve.c();
}

namespace {

bool unit_square_mod(const BigInt& q, long long p) {
  BigInt bp = to_bigint(p);
  if (p == 2) {
    BigInt m = q % 8;
    if (m < 0) m += 8;
    return m == 1;
  }
  BigInt r = q % bp;
  if (r < 0) r += bp;
  BigInt e;
  mpz_powm_ui(e.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2),
              bp.get_mpz_t());
  return e == 1;
}

}  // namespace

bool is_qp_square(const Rational& w, long long p) {
  if (w == 0) return true;
  BigInt bp = to_bigint(p);
  long v = valuation(w, bp);
  if (v % 2 != 0) return false;
  Rational unit = w / rational_pow(Rational(bp), v);
  // num/den = (num*den) * den^-2: square-equivalent to num*den.
  return unit_square_mod(BigInt(unit.get_num()) * unit.get_den(), p);
}

namespace {

enum class TriState { True, False, Undecided };

// w(u) = u^3 + b u + c for a unit-or-integral root approximation u != exact.
TriState unit_root_square(const Curve& curve, long long p, const BigInt& a, long prec) {
  BigInt bp = to_bigint(p);
  BigInt modK = bigint_pow(bp, static_cast<unsigned long>(prec));
  BigInt w = (((a * a % modK) * a % modK) + curve.b().get_num() * a + curve.c().get_num()) % modK;
  if (w < 0) w += modK;
  if (w == 0) return TriState::Undecided;
  long v = valuation(w, bp);
  long margin = (p == 2) ? 4 : 2;
  if (v + margin > prec) return TriState::Undecided;
  if (v % 2 != 0) return TriState::False;
  BigInt unit = w / bigint_pow(bp, static_cast<unsigned long>(v));
  return unit_square_mod(unit, p) ? TriState::True : TriState::False;
}

// u = 1/beta with v(beta) = e >= 1: w = (1 + b beta^2 + c beta^3)/beta^3 with
// unit numerator; square iff e is even and N*unit(beta) is a unit square.
TriState reciprocal_root_square(const Curve& curve, long long p, const BigInt& a, long prec) {
  BigInt bp = to_bigint(p);
  BigInt modK = bigint_pow(bp, static_cast<unsigned long>(prec));
  BigInt beta = a % modK;
  if (beta < 0) beta += modK;
  if (beta == 0) return TriState::Undecided;
  long e = valuation(beta, bp);
  if (e == 0) return TriState::False;  // unit root; the direct pass owns it
  long margin = (p == 2) ? 4 : 2;
  if (prec - e < margin) return TriState::Undecided;
  if (e % 2 != 0) return TriState::False;
  BigInt b2 = beta * beta % modK;
  BigInt N = (1 + curve.b().get_num() * b2 + curve.c().get_num() * (b2 * beta % modK)) % modK;
  if (N < 0) N += modK;
  BigInt q = N * (beta / bigint_pow(bp, static_cast<unsigned long>(e)));
  return unit_square_mod(q, p) ? TriState::True : TriState::False;
}

bool full_mode_test(const UniPoly& phi, const Curve& curve, long long p) {
  if (!is_integer(curve.b()) || !is_integer(curve.c()))
    throw math_error("full mode requires an integral curve model");

  // Rational roots of x^3+bx+c that are preimage roots give w = 0 (a square).
  {
    UniPoly cubic = curve.rhs_cubic();
    auto ci = cubic.primitive_integer_form();
    BigInt c0 = ci.coeffs.front(), lead = ci.coeffs.back();
    if (c0 == 0 && phi.evaluate(Rational(0)) == 0) return true;
    if (abs(c0) > BigInt("1000000000000")) c0 = 0;  // skip the scan on huge constants
    if (c0 != 0) {
      auto divisors = [](BigInt n) {
        std::vector<BigInt> out;
        n = abs(n);
        for (BigInt d(1); d * d <= n; ++d)
          if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
          }
        return out;
      };
      for (const auto& u : divisors(c0))
        for (const auto& v : divisors(lead))
          for (int sgn : {1, -1}) {
            Rational r = make_rational(u * sgn, v);
            if (cubic.evaluate(r) == 0 && phi.evaluate(r) == 0) return true;
          }
    }
  }

  ZPoly sf = squarefree_zpoly(phi);
  ZPoly rev;
  if (sf.back() % to_bigint(p) == 0) rev = squarefree_zpoly(UniPoly::from_integer_coeffs(reverse_zpoly(sf)));

  for (long target = 24; target <= kPrecisionCap; target *= 2) {
    bool undecided = false;
    {
      RootSearch search(p, depth_budget(sf, p), /*collect=*/true, target);
      search.run(sf, 0);
      for (const auto& root : search.roots) {
        if (root.exact) {
          Rational u(root.value);
          if (is_qp_square(rational_pow(u, 3) + curve.b() * u + curve.c(), p)) return true;
        } else {
          TriState s = unit_root_square(curve, p, root.value, root.precision);
          if (s == TriState::True) return true;
          if (s == TriState::Undecided) undecided = true;
        }
      }
    }
    if (!rev.empty()) {
      RootSearch search(p, depth_budget(rev, p), /*collect=*/true, target);
      search.run(rev, 0);
      for (const auto& root : search.roots) {
        if (root.exact) {
          if (root.value == 0) continue;
          Rational u = make_rational(BigInt(1), root.value);
          if (is_qp_square(rational_pow(u, 3) + curve.b() * u + curve.c(), p)) return true;
        } else {
          TriState s = reciprocal_root_square(curve, p, root.value, root.precision);
          if (s == TriState::True) return true;
          if (s == TriState::Undecided) undecided = true;
        }
      }
    }
    if (!undecided) return false;
  }
  throw cap_exceeded("ordinate square test precision cap exceeded");
}

}  // namespace

bool local_divisibility_test(const Curve& curve, const Rational& xP, const Rational& yP, int m,
                             long long p, LocalTestMode mode) {
  if (!point_on_curve(curve, xP, yP)) throw precondition_error("point not on curve");
  if (!is_prime_ll(p)) throw math_error("p must be prime");
  if (m < 1) throw math_error("m >= 1 required");
  UniPoly phi = preimage_poly(curve, m, xP);
  if (mode == LocalTestMode::Abscissa) return qp_root_exists(phi, p).exists;
  return full_mode_test(phi, curve, p);
}

SweepReport sweep(const Curve& curve, const Rational& xP, const Rational& yP, int m,
                  long long limit, LocalTestMode mode, std::optional<long long> group_order,
                  const std::string& curve_label) {
  if (!point_on_curve(curve, xP, yP)) throw precondition_error("point not on curve");
  if (limit < 2) throw math_error("limit >= 2 required");
  if (m < 1) throw math_error("m >= 1 required");
  SweepReport rep;
  rep.curve_label = curve_label;
  rep.m = m;
  rep.mode = mode;
  rep.limit = limit;
  UniPoly phi = preimage_poly(curve, m, xP);  // shared by all per-prime tests
  for (long long p : primes_up_to(limit)) {
    SweepEntry e;
    e.prime = p;
    if (mode == LocalTestMode::Abscissa) {
      RootReport rr = qp_root_exists(phi, p);
      e.solvable = rr.exists;
      e.certificate = rr.certificate;
    } else {
      e.solvable = full_mode_test(phi, curve, p);
      e.certificate =
          e.solvable ? RootCertificate::RecursiveRefinement : RootCertificate::ExhaustedNoRoot;
    }
    (e.solvable ? rep.solvable : rep.unsolvable).push_back(p);
    rep.entries.push_back(e);
  }
  long long total = static_cast<long long>(rep.solvable.size() + rep.unsolvable.size());
  rep.density_unsolvable =
      total == 0 ? Rational(0) : make_rational(to_bigint(static_cast<long long>(rep.unsolvable.size())), to_bigint(total));
  if (group_order) {
    if (*group_order <= 0) throw math_error("group order must be positive");
    rep.threshold = 1.0 / static_cast<double>(*group_order);
  }
  return rep;
}

}  // namespace divlab
