#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divlab/mat2mod.hpp"

namespace divlab {

using TorsionVec = std::array<long long, 2>;  // element of (Z/n)^2

// Finite subgroup of GL_2(Z/n), closed element set plus the generators it came from.
struct MatrixGroup {
  long long n = 1;
  std::vector<Mat2Mod> generators;
  std::vector<Mat2Mod> elements;  // sorted, canonical

  size_t order() const { return elements.size(); }
  bool contains(const Mat2Mod& m) const;
  size_t index_of(const Mat2Mod& m) const;  // throws if absent
  bool is_abelian() const;
  bool is_elementary_abelian(long long prime) const;
};

MatrixGroup group_closure(const std::vector<Mat2Mod>& gens, long long n,
                          size_t cap = 1'000'000);

// Id + 2 [[x+w, y],[x+y+z, x+y]] over Z/4.
Mat2Mod sigma_family(long long x, long long y, long long z, long long w);
// Recover (x,y,z,w) mod 2 from a sigma_family matrix.
std::array<long long, 4> sigma_family_params(const Mat2Mod& m);

// Exhaustive small-order rigidity scan over the upper-triangular shapes
// [[e, a],[0, e+kp]]: squares forcing a=0, kp=0, and unipotent cubes forcing Id.
struct OrderRigidityResult {
  bool square_case_ok = false;
  bool cube_case_ok = false;
  std::optional<Mat2Mod> witness;  // first counterexample when either fails
  bool ok() const { return square_case_ok && cube_case_ok; }
};
OrderRigidityResult verify_order_rigidity(long long p, int r, long long cap = 60'000'000);

enum class StabilizerKind {
  PlusMinusP1Det1,      // sigma e1 = +-e1, det = 1
  FixP1Det1,            // sigma e1 = e1, det = 1
  PlusMinusP1Det1ModP,  // sigma e1 = +-e1, det = 1 mod p
};
MatrixGroup stabilizer_enumeration(long long p, int r, StabilizerKind kind,
                                   long long cap = 10'000'000);

// A 1-cocycle G -> (Z/n)^2 (cocycle identity validated on construction).
struct Cocycle {
  std::shared_ptr<const MatrixGroup> group;
  std::vector<TorsionVec> values;  // indexed like group->elements

  const TorsionVec& at(const Mat2Mod& m) const { return values[group->index_of(m)]; }
};

// Extends generator values along the closure; throws "not a cocycle" when the
// extension is inconsistent.
Cocycle make_cocycle(std::shared_ptr<const MatrixGroup> group,
                     const std::map<Mat2Mod, TorsionVec>& generator_values);
// Validates a fully-specified value table.
Cocycle make_cocycle_from_values(std::shared_ptr<const MatrixGroup> group,
                                 std::vector<TorsionVec> values);
Cocycle zero_cocycle(std::shared_ptr<const MatrixGroup> group);
Cocycle coboundary(std::shared_ptr<const MatrixGroup> group, const TorsionVec& a);

// Elements sigma with no A solving Z_sigma = (sigma - 1) A (n^2 enumeration).
std::vector<Mat2Mod> local_condition_check(const Cocycle& z);

struct CohomologyReport {
  size_t group_order = 0;
  size_t cocycle_count = 0;     // |Z^1|
  size_t coboundary_count = 0;  // |B^1|
  size_t h1_order = 0;
  size_t h1loc_order = 0;
  std::vector<long long> h1_elementary_divisors;
  std::vector<long long> h1loc_elementary_divisors;
};

struct CohomologyCaps {
  size_t max_group_order = 64;
  long long max_modulus = 32;
  size_t max_candidates = 1u << 24;  // (n^2)^{#generators}
};

// Brute-force Z^1, B^1, the local-condition filter, and both quotients.
CohomologyReport h1_and_h1loc(std::shared_ptr<const MatrixGroup> group,
                              const CohomologyCaps& caps = {});

double density_threshold(const MatrixGroup& group);

}  // namespace divlab
