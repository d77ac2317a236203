#include "divlab/pseudodiv_example.hpp"

namespace divlab::pseudodiv_example {

LegendreCurve legendre() { return LegendreCurve(Rational(9), Rational(6), Rational(-15)); }

Curve curve() { return Curve(Rational(-171), Rational(810)); }

Rational point_x() { return Rational(10); }
Rational point_y() { return Rational(10); }

const std::vector<BigInt>& phi4_coeffs() {
  static const std::vector<BigInt> coeffs = [] {
    const char* ascending[] = {
        "570463955816032161", "-478587272134802400", "146812808536034040",
        "-14987477917513440", "-1996085493644292",   "695993396274720",
        "-68296345025400",    "1203164578080",       "300976938918",
        "-32425103520",       "2294454600",          "-134693280",
        "4862268",            "-139680",             "6840",
        "-160",               "1"};
    std::vector<BigInt> v;
    for (const char* s : ascending) v.emplace_back(s);
    return v;
  }();
  return coeffs;
}

const std::vector<BigInt>& tower() {
  static const std::vector<BigInt> t{BigInt(-1), BigInt(2), BigInt(3), BigInt(7)};
  return t;
}

namespace {

// Basis masks in the (-1, 2, 3, 7) tower.
constexpr unsigned kI = 1;       // sqrt(-1)
constexpr unsigned kR2 = 2;      // sqrt(2)
constexpr unsigned kR3 = 4;      // sqrt(3)
constexpr unsigned kR7 = 8;      // sqrt(7)
constexpr unsigned kRm3 = 5;     // sqrt(-3)  = sqrt(-1) sqrt(3)
constexpr unsigned kRm6 = 7;     // sqrt(-6)  = sqrt(-1) sqrt(2) sqrt(3)
constexpr unsigned kR21 = 12;    // sqrt(21)  = sqrt(3) sqrt(7)
constexpr unsigned kR42 = 14;    // sqrt(42)  = sqrt(2) sqrt(3) sqrt(7)

struct Term {
  unsigned mask;
  long long coeff;
};

MultiQuadElement make(const std::vector<Term>& terms) {
  std::vector<Rational> coords(16, Rational(0));
  for (const auto& t : terms) coords[t.mask] = to_rational(t.coeff);
  return MultiQuadElement(tower(), std::move(coords));
}

}  // namespace

const std::vector<std::pair<MultiQuadElement, MultiQuadElement>>& divisor_table() {
  static const auto table = [] {
    std::vector<std::pair<MultiQuadElement, MultiQuadElement>> v;
    auto row = [&](const std::vector<Term>& x, const std::vector<Term>& y) {
      v.emplace_back(make(x), make(y));
    };
    row({{0, -1}, {kR7, 2}}, {{0, 14}, {kR7, -10}});
    row({{0, -1}, {kR7, -2}}, {{0, 14}, {kR7, 10}});
    row({{0, 27}, {kR7, -6}}, {{0, 126}, {kR7, -54}});
    row({{0, 27}, {kR7, 6}}, {{0, 126}, {kR7, 54}});
    row({{0, -3}, {kRm3, 6}, {kR3, 6}, {kI, -12}}, {{0, 72}, {kRm3, -6}, {kR3, -42}});
    row({{0, -3}, {kRm3, 6}, {kR3, -6}, {kI, 12}}, {{0, 72}, {kRm3, -6}, {kR3, 42}});
    row({{0, -3}, {kRm3, -6}, {kR3, 6}, {kI, 12}}, {{0, 72}, {kRm3, 6}, {kR3, -42}});
    row({{0, -3}, {kRm3, -6}, {kR3, -6}, {kI, -12}}, {{0, 72}, {kRm3, 6}, {kR3, 42}});
    row({{0, 3}, {kRm6, 3}, {kRm3, 6}, {kR2, -3}},
        {{0, 36}, {kR2, 27}, {kRm6, -15}, {kRm3, -12}});
    row({{0, 3}, {kRm6, 3}, {kRm3, -6}, {kR2, 3}},
        {{0, 36}, {kR2, -27}, {kRm6, -15}, {kRm3, 12}});
    row({{0, 3}, {kRm6, -3}, {kRm3, 6}, {kR2, 3}},
        {{0, 36}, {kR2, -27}, {kRm6, 15}, {kRm3, -12}});
    row({{0, 3}, {kRm6, -3}, {kRm3, -6}, {kR2, -3}},
        {{0, 36}, {kR2, 27}, {kRm6, 15}, {kRm3, 12}});
    row({{0, 27}, {kR42, -3}, {kR21, 6}, {kR2, -21}},
        {{0, 252}, {kR42, -39}, {kR21, 60}, {kR2, -189}});
    row({{0, 27}, {kR42, -3}, {kR21, -6}, {kR2, 21}},
        {{0, 252}, {kR42, -39}, {kR21, -60}, {kR2, 189}});
    row({{0, 27}, {kR42, 3}, {kR21, 6}, {kR2, 21}},
        {{0, 252}, {kR42, 39}, {kR21, 60}, {kR2, 189}});
    row({{0, 27}, {kR42, 3}, {kR21, -6}, {kR2, -21}},
        {{0, 252}, {kR42, 39}, {kR21, -60}, {kR2, -189}});
    return v;
  }();
  return table;
}

const std::vector<long long>& solvable_primes() {
  static const std::vector<long long> v{
      3,   7,   13,  17,  19,  29,  31,  37,  41,  47,  53,  59,  61,  73,  79,  83,  89,
      97,  103, 109, 113, 127, 131, 137, 139, 149, 151, 157, 167, 181, 193, 197, 199, 223,
      227, 229, 233, 241, 251, 257, 271, 277, 281, 283, 307, 311, 313, 317, 337, 349, 353,
      367, 373, 383, 389, 397, 401, 409, 419, 421, 433, 439, 449, 457, 463, 467, 479, 487,
      503, 521, 523, 541, 557, 563, 569, 577, 587, 593, 601, 607, 613, 617, 619, 631, 641,
      643, 647, 653, 661, 673, 691, 701, 709, 719, 727, 733, 751, 757, 761, 769, 787, 809,
      811, 821, 823, 829, 839, 853, 857, 859, 877, 881, 887, 919, 929, 937, 953, 967, 971,
      977, 983, 991, 997};
  return v;
}

const std::vector<long long>& unsolvable_primes() {
  static const std::vector<long long> v{
      2,   5,   11,  23,  43,  67,  71,  101, 107, 163, 173, 179, 191, 211, 239,
      263, 269, 293, 331, 347, 359, 379, 431, 443, 461, 491, 499, 509, 547, 571,
      599, 659, 677, 683, 739, 743, 773, 797, 827, 863, 883, 907, 911, 941, 947};
  return v;
}

std::vector<Mat2Mod> group_generators() {
  return {sigma_family(1, 0, 0, 0), sigma_family(0, 1, 0, 0), sigma_family(0, 0, 1, 0),
          sigma_family(0, 0, 0, 1)};
}

std::shared_ptr<const MatrixGroup> group() {
  static const auto g =
      std::make_shared<const MatrixGroup>(group_closure(group_generators(), 4));
  return g;
}

Cocycle cocycle_2w() {
  auto g = group();
  std::vector<TorsionVec> values(g->order());
  for (size_t i = 0; i < g->order(); ++i) {
    auto params = sigma_family_params(g->elements[i]);
    values[i] = TorsionVec{mod_reduce(2 * params[3], 4), 0};
  }
  return make_cocycle_from_values(g, std::move(values));
}

std::vector<Mat2Mod> expected_failing_set() {
  return {sigma_family(1, 0, 0, 1), sigma_family(0, 1, 0, 1), sigma_family(0, 0, 1, 1),
          sigma_family(1, 0, 1, 1)};
}

const std::vector<NamedCurve>& named_curves() {
  static const std::vector<NamedCurve> v{
      {"paper-sec6", "-171", "810", true, "9", "6", "-15"},
      {"torsion7-a", "-3483", "121014", false, "", "", ""},
      {"torsion7-b", "-1323", "6395814", false, "", "", ""},
      {"torsion5-a", "-432", "8208", false, "", "", ""},
      {"torsion5-b", "-27", "55350", false, "", "", ""},
  };
  return v;
}

}  // namespace divlab::pseudodiv_example
