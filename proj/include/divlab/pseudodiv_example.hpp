#pragma once

#include <memory>
#include <vector>

#include "divlab/descent.hpp"
#include "divlab/division_poly.hpp"
#include "divlab/galois.hpp"
#include "divlab/multiquad.hpp"
#include "divlab/numeric.hpp"

namespace divlab::pseudodiv_example {

// The bundled pseudodivisible-point showcase: y^2 = x^3 - 171x + 810 with
// full rational 2-torsion (9, 6, -15), P = (10, 10), m = 4.

LegendreCurve legendre();          // (9, 6, -15)
Curve curve();                     // b = -171, c = 810
Rational point_x();                // 10
Rational point_y();                // 10

// The degree-16 preimage polynomial of x(P) = 10 (ascending coefficients).
const std::vector<BigInt>& phi4_coeffs();

// Radicands (-1, 2, 3, 7); bit order matches the radicand order.
const std::vector<BigInt>& tower();

// The 16 (abscissa, ordinate) pairs of the 4-divisors of P in the tower.
const std::vector<std::pair<MultiQuadElement, MultiQuadElement>>& divisor_table();

// Local solvability split of the preimage polynomial for p < 1000.
const std::vector<long long>& solvable_primes();
const std::vector<long long>& unsolvable_primes();

// The mod-4 matrix group of the example and its cocycle.
std::vector<Mat2Mod> group_generators();  // sigma(1,0,0,0) ... sigma(0,0,0,1)
std::shared_ptr<const MatrixGroup> group();
Cocycle cocycle_2w();  // Z_{sigma(x,y,z,w)} = (2w, 0)
std::vector<Mat2Mod> expected_failing_set();

// Named curve fixtures exposed by the CLI.
struct NamedCurve {
  const char* name;
  const char* b;
  const char* c;
  bool has_legendre;
  const char* alpha;
  const char* beta;
  const char* gamma;
};
const std::vector<NamedCurve>& named_curves();

}  // namespace divlab::pseudodiv_example
