#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "divlab/errors.hpp"
#include "divlab/padic.hpp"
#include "divlab/pseudodiv_example.hpp"

using namespace divlab;

namespace {

std::mt19937_64 rng(0xadd1c);

UniPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  for (long c : ascending) v.emplace_back(c);
  return UniPoly(std::move(v));
}

UniPoly example_phi4() {
  return preimage_poly(pseudodiv_example::curve(), 4, pseudodiv_example::point_x());
}

}  // namespace

TEST_CASE("x^2 - 2 over small primes") {
  UniPoly f = poly({-2, 0, 1});
  RootReport r7 = zp_root_exists(f, 7);
  CHECK(r7.exists);
  CHECK(r7.certificate == RootCertificate::SimpleRootHensel);
  RootReport r5 = zp_root_exists(f, 5);
  CHECK_FALSE(r5.exists);
  CHECK(r5.certificate == RootCertificate::ExhaustedNoRoot);
}

TEST_CASE("embedded preimage polynomial at p = 3 and p = 5") {
  UniPoly phi = example_phi4();
  CHECK(zp_root_exists(phi, 3).exists);
  CHECK_FALSE(zp_root_exists(phi, 5).exists);
}

TEST_CASE("qp via reversal: 2x - 1 at p = 2") {
  UniPoly f = poly({-1, 2});
  CHECK_FALSE(zp_root_exists(f, 2).exists);  // 1/2 is not 2-integral
  RootReport q = qp_root_exists(f, 2);
  CHECK(q.exists);
  CHECK(q.via_reversal);
}

TEST_CASE("monic polynomials: qp agrees with zp") {
  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
    UniPoly phi = example_phi4();
    CHECK(qp_root_exists(phi, p).exists == zp_root_exists(phi, p).exists);
  }
  UniPoly f = poly({3, -1, 0, 1});
  for (long long p : {2LL, 3LL, 5LL, 7LL})
    CHECK(qp_root_exists(f, p).exists == zp_root_exists(f, p).exists);
}

TEST_CASE("error paths") {
  CHECK_THROWS_WITH_AS(zp_root_exists(UniPoly(), 5), "zero polynomial", math_error);
  CHECK_THROWS_AS(zp_root_exists(poly({1, 1}), 6), math_error);  // composite p
  CHECK_FALSE(zp_root_exists(UniPoly::constant(Rational(3)), 5).exists);
}

TEST_CASE("rational-root soundness: products of linear factors solvable everywhere") {
  std::uniform_int_distribution<long> small(-20, 20);
  for (int trial = 0; trial < 25; ++trial) {
    // f = prod (d_i x - n_i), roots n_i / d_i
    UniPoly f = UniPoly::constant(Rational(1));
    for (int j = 0; j < 3; ++j) {
      long n = small(rng);
      long d = 1 + (rng() % 7);
      f = f * poly({-n, d});
    }
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 97LL}) {
      CHECK(qp_root_exists(f, p).exists);
    }
  }
}

TEST_CASE("hensel witness validity") {
  std::uniform_int_distribution<long> small(-30, 30);
  int checked = 0;
  while (checked < 40) {
    std::vector<Rational> cs;
    for (int i = 0; i <= 4; ++i) cs.emplace_back(small(rng));
    UniPoly f{cs};
    if (f.degree() < 2) continue;
    for (long long p : {3LL, 5LL, 7LL}) {
      RootReport rep = zp_root_exists(f, p);
      if (!rep.exists || rep.certificate != RootCertificate::SimpleRootHensel) continue;
      if (rep.witness_exact) {
        CHECK(f.evaluate(Rational(*rep.witness)) == 0);
      } else {
        // v_p(f(a)) > 2 v_p(f'(a)) at the witness
        auto form = f.primitive_integer_form();
        UniPoly fi = UniPoly::from_integer_coeffs(form.coeffs);
        BigInt fa = fi.evaluate_integer(*rep.witness);
        BigInt fda = fi.derivative().evaluate_integer(*rep.witness);
        REQUIRE(fda != 0);
        long t = valuation(fda, to_bigint(p));
        if (fa == 0) {
          CHECK(true);
        } else {
          CHECK(valuation(fa, to_bigint(p)) > 2 * t);
        }
      }
      ++checked;
    }
  }
}

TEST_CASE("local divisibility on the worked example") {
  Curve e = pseudodiv_example::curve();
  Rational x = pseudodiv_example::point_x(), y = pseudodiv_example::point_y();
  CHECK(local_divisibility_test(e, x, y, 4, 3, LocalTestMode::Abscissa));
  CHECK_FALSE(local_divisibility_test(e, x, y, 4, 11, LocalTestMode::Abscissa));
  CHECK_FALSE(local_divisibility_test(e, x, y, 4, 2, LocalTestMode::Abscissa));
  CHECK_THROWS_AS(local_divisibility_test(e, x, Rational(11), 4, 3, LocalTestMode::Abscissa),
                  precondition_error);
}

TEST_CASE("mode monotonicity: full implies abscissa") {
  Curve e = pseudodiv_example::curve();
  Rational x = pseudodiv_example::point_x(), y = pseudodiv_example::point_y();
  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL}) {
    bool full = local_divisibility_test(e, x, y, 4, p, LocalTestMode::Full);
    bool absc = local_divisibility_test(e, x, y, 4, p, LocalTestMode::Abscissa);
    if (full) CHECK(absc);
  }
  // a globally divisible configuration: P = [3]D0 for rational D0 = (10,10)
  {
    AbscissaMap triple = abscissa_map(e, 3);
    Rational x3 = triple.theta.evaluate(Rational(10)) / triple.psi_sq.evaluate(Rational(10));
    Rational rhs = rational_pow(x3, 3) + e.b() * x3 + e.c();
    auto y3 = exact_sqrt(rhs);
    REQUIRE(y3.has_value());
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 31LL}) {
      bool full = local_divisibility_test(e, x3, *y3, 3, p, LocalTestMode::Full);
      bool absc = local_divisibility_test(e, x3, *y3, 3, p, LocalTestMode::Abscissa);
      CHECK(full);  // rational 3-divisor exists
      CHECK(absc);
    }
  }
}

TEST_CASE("sweep on the worked example up to 100") {
  Curve e = pseudodiv_example::curve();
  SweepReport rep = sweep(e, pseudodiv_example::point_x(), pseudodiv_example::point_y(), 4, 100,
                          LocalTestMode::Abscissa, 16, "paper-sec6");
  std::vector<long long> expect_unsolv{2, 5, 11, 23, 43, 67, 71};
  CHECK(rep.unsolvable == expect_unsolv);
  CHECK(rep.solvable.size() + rep.unsolvable.size() == 25);  // pi(100)
  CHECK(*rep.threshold == doctest::Approx(0.0625));
  CHECK(rep.entries.size() == 25);
}

TEST_CASE("sweep limit = 2 yields the single unsolvable prime 2") {
  Curve e = pseudodiv_example::curve();
  SweepReport rep = sweep(e, pseudodiv_example::point_x(), pseudodiv_example::point_y(), 4, 2,
                          LocalTestMode::Abscissa);
  CHECK(rep.solvable.empty());
  CHECK(rep.unsolvable == std::vector<long long>{2});
  CHECK(rep.density_unsolvable == Rational(1));
}

TEST_CASE("sweep determinism") {
  Curve e = pseudodiv_example::curve();
  SweepReport a = sweep(e, pseudodiv_example::point_x(), pseudodiv_example::point_y(), 4, 60,
                        LocalTestMode::Abscissa);
  SweepReport b = sweep(e, pseudodiv_example::point_x(), pseudodiv_example::point_y(), 4, 60,
                        LocalTestMode::Abscissa);
  CHECK(a.solvable == b.solvable);
  CHECK(a.unsolvable == b.unsolvable);
  CHECK(a.density_unsolvable == b.density_unsolvable);
}

namespace {

// Independent decision oracle: a squarefree integer polynomial has a root in
// Z_p iff it has a root mod p^{2t+1}, t = v_p(disc). Exhaustive residue scan.
bool zp_root_oracle(const UniPoly& f, long long p, bool* feasible) {
  UniPoly g = UniPoly::gcd(f, f.derivative());
  UniPoly sf = g.degree() >= 1 ? UniPoly::divmod(f, g).first : f;
  auto form = sf.primitive_integer_form();
  UniPoly fi = UniPoly::from_integer_coeffs(form.coeffs);
  Rational disc = poly_discriminant(fi);
  long t = valuation(BigInt(disc.get_num()), to_bigint(p));
  double count = std::pow(static_cast<double>(p), static_cast<double>(2 * t + 1));
  if (count > 2e6) {
    *feasible = false;
    return false;
  }
  *feasible = true;
  BigInt mod = bigint_pow(to_bigint(p), static_cast<unsigned long>(2 * t + 1));
  for (BigInt a(0); a < mod; ++a)
    if (fi.evaluate_integer(a) % mod == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("recursive decision agrees with the exhaustive mod-p^(2t+1) oracle") {
  std::uniform_int_distribution<long> small(-9, 9);
  int compared = 0;
  while (compared < 150) {
    std::vector<Rational> cs;
    size_t deg = 2 + rng() % 3;
    for (size_t i = 0; i <= deg; ++i) cs.emplace_back(small(rng));
    UniPoly f{cs};
    if (f.degree() < 2) continue;
    if (UniPoly::gcd(f, f.derivative()).degree() >= 1) continue;  // keep disc != 0
    for (long long p : {2LL, 3LL, 5LL}) {
      bool feasible = false;
      bool oracle = zp_root_oracle(f, p, &feasible);
      if (!feasible) continue;
      CHECK(zp_root_exists(f, p).exists == oracle);
      ++compared;
    }
  }
}

TEST_CASE("repeated factors and prime-power roots") {
  // (x-1)^2 (x^2+1): root 1 regardless of multiplicity
  UniPoly sq = poly({-1, 1}) * poly({-1, 1}) * poly({1, 0, 1});
  CHECK(zp_root_exists(sq, 5).exists);
  // (x-5)^2 at p=5: the squarefree part has the simple root 5 = 0 mod 5
  UniPoly f5 = poly({-5, 1}) * poly({-5, 1});
  RootReport r = zp_root_exists(f5, 5);
  CHECK(r.exists);
  REQUIRE(r.witness.has_value());
  BigInt residue = *r.witness % 25;
  CHECK(residue == 5);
  // x^2 at any p: root 0
  CHECK(zp_root_exists(poly({0, 0, 1}), 7).exists);
}

TEST_CASE("negative-valuation roots through the reversal") {
  // 25x^2 - 1: roots +-1/5, not in Z_5 but in Q_5
  UniPoly f = poly({-1, 0, 25});
  CHECK_FALSE(zp_root_exists(f, 5).exists);
  RootReport q = qp_root_exists(f, 5);
  CHECK(q.exists);
  CHECK(q.via_reversal);
  // same polynomial is plainly solvable at p = 3 (1/5 is a 3-adic unit)
  CHECK(qp_root_exists(f, 3).exists);
  CHECK_FALSE(qp_root_exists(f, 3).via_reversal);
}

TEST_CASE("2-adic square roots via the mod-8 criterion") {
  CHECK(zp_root_exists(poly({-17, 0, 1}), 2).exists);       // 17 = 1 mod 8
  CHECK_FALSE(zp_root_exists(poly({-3, 0, 1}), 2).exists);  // 3 != 1 mod 8
  CHECK_FALSE(zp_root_exists(poly({-8, 0, 1}), 2).exists);  // odd valuation
  CHECK(zp_root_exists(poly({-16, 0, 1}), 2).exists);       // (x-4)(x+4)
}

TEST_CASE("abscissa and full mode agree on the showcase below 1000") {
  Curve e = pseudodiv_example::curve();
  SweepReport absc = sweep(e, pseudodiv_example::point_x(), pseudodiv_example::point_y(), 4,
                           1000, LocalTestMode::Abscissa);
  SweepReport full = sweep(e, pseudodiv_example::point_x(), pseudodiv_example::point_y(), 4,
                           1000, LocalTestMode::Full);
  CHECK(absc.solvable == full.solvable);
  CHECK(absc.unsolvable == full.unsolvable);
}

TEST_CASE("unsolvable density stays in the coarse band around 1/4") {
  Curve e = pseudodiv_example::curve();
  for (long long limit : {500LL, 1000LL, 2000LL}) {
    SweepReport rep = sweep(e, pseudodiv_example::point_x(), pseudodiv_example::point_y(), 4,
                            limit, LocalTestMode::Abscissa);
    double density = rep.density_unsolvable.get_d();
    CHECK(density >= 0.15);
    CHECK(density <= 0.40);
  }
}

TEST_CASE("exact square detection in Q_p") {
  CHECK(is_qp_square(Rational(0), 5));
  CHECK(is_qp_square(Rational(4), 5));
  CHECK(is_qp_square(Rational(50), 7));     // v = 0, 50 = 1 mod 7
  CHECK_FALSE(is_qp_square(Rational(5), 5));   // odd valuation
  CHECK(is_qp_square(Rational(25), 5));
  CHECK(is_qp_square(Rational(17), 2));     // 1 mod 8
  CHECK_FALSE(is_qp_square(Rational(3), 2));
  CHECK_FALSE(is_qp_square(Rational(2), 2));
  CHECK(is_qp_square(make_rational(1, 4), 2));
  CHECK(is_qp_square(make_rational(9, 49), 7));
}
