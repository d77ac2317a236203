#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "divlab/errors.hpp"
#include "divlab/galois.hpp"
#include "divlab/pseudodiv_example.hpp"

using namespace divlab;
namespace ex = divlab::pseudodiv_example;

TEST_CASE("sigma family displays") {
  CHECK(ex::group_generators()[0] == Mat2Mod(4, -1, 0, 2, -1));
  CHECK(ex::group_generators()[1] == Mat2Mod(4, 1, 2, 2, -1));
  CHECK(ex::group_generators()[2] == Mat2Mod(4, 1, 0, 2, 1));
  CHECK(ex::group_generators()[3] == Mat2Mod(4, -1, 0, 0, 1));
  CHECK(sigma_family(0, 0, 0, 0) == Mat2Mod::identity(4));
  auto params = sigma_family_params(sigma_family(1, 0, 1, 1));
  CHECK(params == std::array<long long, 4>{1, 0, 1, 1});
}

TEST_CASE("group closure examples") {
  auto g = ex::group();
  CHECK(g->order() == 16);
  CHECK(g->is_elementary_abelian(2));

  MatrixGroup trivial = group_closure({Mat2Mod::identity(4)}, 4);
  CHECK(trivial.order() == 1);

  MatrixGroup eta25 = group_closure({Mat2Mod(25, -1, 1, 0, -1)}, 25);
  CHECK(eta25.order() == 50);

  // parametrized family closure equals the four-generator closure
  std::vector<Mat2Mod> all;
  for (long long x = 0; x < 2; ++x)
    for (long long y = 0; y < 2; ++y)
      for (long long z = 0; z < 2; ++z)
        for (long long w = 0; w < 2; ++w) all.push_back(sigma_family(x, y, z, w));
  MatrixGroup from_family = group_closure(all, 4);
  CHECK(from_family.elements == g->elements);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_WITH_AS(group_closure({Mat2Mod(4, 2, 0, 0, 2)}, 4), "non-invertible generator",
                       math_error);
  CHECK_THROWS_AS(group_closure({Mat2Mod(25, -1, 1, 0, -1)}, 25, 10), cap_exceeded);
}

TEST_CASE("closure idempotence") {
  auto g = ex::group();
  MatrixGroup again = group_closure(g->elements, 4);
  CHECK(again.elements == g->elements);
}

TEST_CASE("elementary abelian detection") {
  MatrixGroup eta4 = group_closure({Mat2Mod(4, -1, 1, 0, -1)}, 4);  // cyclic of order 4
  CHECK(eta4.is_abelian());
  CHECK_FALSE(eta4.is_elementary_abelian(2));
}

TEST_CASE("order rigidity scan at the excluded prime 2") {
  auto res = verify_order_rigidity(2, 1);
  CHECK_FALSE(res.square_case_ok);  // the square argument needs p != 2
}

TEST_CASE("order rigidity scan") {
  CHECK(verify_order_rigidity(5, 1).ok());
  CHECK(verify_order_rigidity(7, 2).ok());
  auto bad = verify_order_rigidity(3, 1);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.cube_case_ok);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == Mat2Mod(3, 1, 1, 0, 1));
  for (long long p : {5LL, 7LL, 11LL, 13LL}) {
    long long pr = p;
    for (int r = 1; pr <= 343; ++r, pr *= p) CHECK(verify_order_rigidity(p, r).ok());
  }
}

TEST_CASE("stabilizer enumerations") {
  for (long long p : {5LL, 7LL}) {
    for (int r : {1, 2}) {
      long long pr = 1;
      for (int i = 0; i < r; ++i) pr *= p;

      MatrixGroup pm = stabilizer_enumeration(p, r, StabilizerKind::PlusMinusP1Det1);
      CHECK(pm.order() == static_cast<size_t>(2 * pr));
      Mat2Mod eta(pr, -1, 1, 0, -1);
      MatrixGroup eta_closure = group_closure({eta}, pr);
      CHECK(pm.elements == eta_closure.elements);
      REQUIRE(pm.generators.size() == 1);
      CHECK(mat_order(pm.generators[0]) == 2 * pr);

      MatrixGroup fix = stabilizer_enumeration(p, r, StabilizerKind::FixP1Det1);
      CHECK(fix.order() == static_cast<size_t>(pr));
      Mat2Mod omega(pr, 1, 1, 0, 1);
      CHECK(fix.elements == group_closure({omega}, pr).elements);

      MatrixGroup modp = stabilizer_enumeration(p, r, StabilizerKind::PlusMinusP1Det1ModP);
      long long bound = 2;
      for (int i = 0; i < 2 * r - 1; ++i) bound *= p;
      CHECK(bound % static_cast<long long>(modp.order()) == 0);
    }
  }
}

TEST_CASE("eta powers have the displayed shape") {
  Mat2Mod eta(25, -1, 1, 0, -1);
  for (long long n = 1; n <= 50; ++n) {
    Mat2Mod pw = mat_pow(eta, static_cast<unsigned long long>(n));
    if (n % 2 == 0)
      CHECK(pw == Mat2Mod(25, 1, -n, 0, 1));
    else
      CHECK(pw == Mat2Mod(25, -1, n, 0, -1));
  }
}

TEST_CASE("cocycle construction and validation") {
  auto g = ex::group();
  Cocycle z = ex::cocycle_2w();
  // spot: values really are (2w, 0)
  for (size_t i = 0; i < g->order(); ++i) {
    auto params = sigma_family_params(g->elements[i]);
    CHECK(z.values[i] == TorsionVec{mod_reduce(2 * params[3], 4), 0});
  }

  Cocycle zero = zero_cocycle(g);
  CHECK(local_condition_check(zero).empty());

  Cocycle cb = coboundary(g, TorsionVec{1, 3});
  CHECK(local_condition_check(cb).empty());

  // generator-value extension agrees with the direct table
  std::map<Mat2Mod, TorsionVec> gen_values;
  for (const auto& gen : g->generators)
    gen_values[gen] = z.values[g->index_of(gen)];
  Cocycle ext = make_cocycle(g, gen_values);
  CHECK(ext.values == z.values);

  // a non-cocycle assignment is rejected
  std::map<Mat2Mod, TorsionVec> bad = gen_values;
  bad[g->generators[0]] = TorsionVec{1, 0};
  CHECK_THROWS_WITH_AS(make_cocycle(g, bad), "not a cocycle", math_error);
}

TEST_CASE("local-condition failing set of the showcase cocycle") {
  Cocycle z = ex::cocycle_2w();
  auto failing = local_condition_check(z);
  auto expect = ex::expected_failing_set();
  std::sort(expect.begin(), expect.end());
  CHECK(failing == expect);

  // the sigma(1,0,0,1) image is {(0,0),(0,2)}, which misses (2,0)
  Mat2Mod s = sigma_family(1, 0, 0, 1);
  std::set<TorsionVec> image;
  for (long long a0 = 0; a0 < 4; ++a0)
    for (long long a1 = 0; a1 < 4; ++a1) {
      TorsionVec a{a0, a1};
      TorsionVec r = mat_apply(s, a);
      image.insert(TorsionVec{mod_reduce(r[0] - a0, 4), mod_reduce(r[1] - a1, 4)});
    }
  CHECK(image == std::set<TorsionVec>{{0, 0}, {0, 2}});
  CHECK(image.find(TorsionVec{2, 0}) == image.end());
}

TEST_CASE("generator images satisfy the local conditions") {
  Cocycle z = ex::cocycle_2w();
  auto failing = local_condition_check(z);
  for (const auto& gen : ex::group_generators())
    CHECK(std::find(failing.begin(), failing.end(), gen) == failing.end());
}

TEST_CASE("cohomology of the showcase group") {
  auto rep = h1_and_h1loc(ex::group());
  CHECK(rep.group_order == 16);
  CHECK(rep.cocycle_count == 256);
  CHECK(rep.coboundary_count == 4);
  CHECK(rep.h1_order == 64);
  CHECK(rep.h1loc_order == 1);
  CHECK(rep.h1loc_elementary_divisors.empty());
  CHECK(rep.cocycle_count == rep.coboundary_count * rep.h1_order);
}

TEST_CASE("cohomology of small groups") {
  MatrixGroup trivial = group_closure({Mat2Mod::identity(4)}, 4);
  auto rep = h1_and_h1loc(std::make_shared<const MatrixGroup>(trivial));
  CHECK(rep.h1_order == 1);
  CHECK(rep.h1loc_order == 1);

  // cyclic groups always have trivial H^1_loc
  for (auto gen : {Mat2Mod(4, -1, 1, 0, -1), Mat2Mod(4, 1, 1, 0, 1), Mat2Mod(4, 0, 1, 3, 0)}) {
    MatrixGroup cyc = group_closure({gen}, 4);
    auto r = h1_and_h1loc(std::make_shared<const MatrixGroup>(cyc));
    CHECK(r.h1loc_order == 1);
    CHECK(r.cocycle_count == r.coboundary_count * r.h1_order);
  }
}

TEST_CASE("density thresholds") {
  CHECK(density_threshold(*ex::group()) == doctest::Approx(0.0625).epsilon(1e-15));
  MatrixGroup trivial = group_closure({Mat2Mod::identity(4)}, 4);
  CHECK(density_threshold(trivial) == 1.0);
  MatrixGroup eta25 = group_closure({Mat2Mod(25, -1, 1, 0, -1)}, 25);
  CHECK(density_threshold(eta25) == doctest::Approx(1.0 / 50).epsilon(1e-15));
}

TEST_CASE("cyclic group mod 25 has trivial H1_loc") {
  MatrixGroup eta25 = group_closure({Mat2Mod(25, -1, 1, 0, -1)}, 25);
  auto rep = h1_and_h1loc(std::make_shared<const MatrixGroup>(eta25));
  CHECK(rep.group_order == 50);
  CHECK(rep.h1loc_order == 1);
  CHECK(rep.cocycle_count == rep.coboundary_count * rep.h1_order);
}

TEST_CASE("caps are enforced") {
  CohomologyCaps tight;
  tight.max_group_order = 8;
  CHECK_THROWS_AS(h1_and_h1loc(ex::group(), tight), cap_exceeded);
  MatrixGroup big_mod = group_closure({Mat2Mod(64, 1, 1, 0, 1)}, 64);
  CHECK_THROWS_AS(h1_and_h1loc(std::make_shared<const MatrixGroup>(big_mod)), cap_exceeded);
}
