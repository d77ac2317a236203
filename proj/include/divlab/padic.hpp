#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divlab/division_poly.hpp"
#include "divlab/numeric.hpp"
#include "divlab/unipoly.hpp"

namespace divlab {

enum class RootCertificate { SimpleRootHensel, RecursiveRefinement, ExhaustedNoRoot };

std::string certificate_name(RootCertificate c);

struct RootReport {
  long long prime = 0;
  bool exists = false;
  std::optional<BigInt> witness;   // residue mod p^precision (or exact root)
  long precision = 0;              // 0 for exact witnesses
  bool witness_exact = false;
  bool via_reversal = false;       // Q_p decision reached through x -> 1/x
  RootCertificate certificate = RootCertificate::ExhaustedNoRoot;
};

// Does f have a root in Z_p? Exact-integer decision: simple roots certified by
// Hensel, multiple residues refined by x <- a + p x with the depth bounded by
// v_p(disc) + deg; crossing the absolute cap is a hard error.
RootReport zp_root_exists(const UniPoly& f, long long p);

// Existence in Q_p: Z_p roots of f plus Z_p roots of the reversal x^d f(1/x).
RootReport qp_root_exists(const UniPoly& f, long long p);

enum class LocalTestMode { Abscissa, Full };
std::string mode_name(LocalTestMode m);

// Abscissa mode: does the m-preimage polynomial of x(P) have a Q_p root?
// Full mode: additionally, some Q_p root u must have u^3+bu+c a square in Q_p.
bool local_divisibility_test(const Curve& curve, const Rational& xP, const Rational& yP, int m,
                             long long p, LocalTestMode mode);

bool point_on_curve(const Curve& curve, const Rational& x, const Rational& y);

struct SweepEntry {
  long long prime = 0;
  bool solvable = false;
  RootCertificate certificate = RootCertificate::ExhaustedNoRoot;
};

struct SweepReport {
  std::string curve_label;
  int m = 0;
  LocalTestMode mode = LocalTestMode::Abscissa;
  long long limit = 0;
  std::vector<SweepEntry> entries;            // ascending primes
  std::vector<long long> solvable;            // ascending
  std::vector<long long> unsolvable;          // ascending
  Rational density_unsolvable;                // |unsolvable| / total
  std::optional<double> threshold;            // 1/|G| when group order supplied
};

SweepReport sweep(const Curve& curve, const Rational& xP, const Rational& yP, int m,
                  long long limit, LocalTestMode mode,
                  std::optional<long long> group_order = std::nullopt,
                  const std::string& curve_label = "");

bool is_qp_square(const Rational& w, long long p);

}  // namespace divlab
