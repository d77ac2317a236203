#include "divlab/galois.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "divlab/errors.hpp"

namespace divlab {

bool MatrixGroup::contains(const Mat2Mod& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

size_t MatrixGroup::index_of(const Mat2Mod& m) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), m);
  if (it == elements.end() || !(*it == m)) throw math_error("element not in group");
  return static_cast<size_t>(it - elements.begin());
}

bool MatrixGroup::is_abelian() const {
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!(mat_mul(a, b) == mat_mul(b, a))) return false;
  return true;
}

bool MatrixGroup::is_elementary_abelian(long long prime) const {
  if (!is_abelian()) return false;
  Mat2Mod id = Mat2Mod::identity(n);
  for (const auto& a : elements) {
    if (a == id) continue;
    if (!(mat_pow(a, static_cast<unsigned long long>(prime)) == id)) return false;
  }
  return true;
}

MatrixGroup group_closure(const std::vector<Mat2Mod>& gens, long long n, size_t cap) {
  for (const auto& g : gens) {
    if (g.n != n) throw math_error("mixed moduli");
    if (!mat_invertible(g)) throw math_error("non-invertible generator");
  }
  std::set<Mat2Mod> seen;
  std::deque<Mat2Mod> frontier;
  Mat2Mod id = Mat2Mod::identity(n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Mat2Mod cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Mat2Mod nxt = mat_mul(cur, g);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap) throw cap_exceeded("group closure cap exceeded");
        frontier.push_back(nxt);
      }
    }
  }
  MatrixGroup out;
  out.n = n;
  out.generators = gens;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

Mat2Mod sigma_family(long long x, long long y, long long z, long long w) {
  return Mat2Mod(4, 1 + 2 * (x + w), 2 * y, 2 * (x + y + z), 1 + 2 * (x + y));
}

std::array<long long, 4> sigma_family_params(const Mat2Mod& m) {
  if (m.n != 4) throw math_error("sigma family lives mod 4");
  auto half = [](long long v) { return mod_reduce(v, 4) / 2 % 2; };
  long long a11 = half(m.e[0] - 1), a12 = half(m.e[1]), a21 = half(m.e[2]), a22 = half(m.e[3] - 1);
  if (mod_reduce(m.e[0] - 1, 2) != 0 || mod_reduce(m.e[3] - 1, 2) != 0 ||
      mod_reduce(m.e[1], 2) != 0 || mod_reduce(m.e[2], 2) != 0)
    throw math_error("matrix is not in the sigma family");
  long long y = a12;
  long long x = mod_reduce(a22 - y, 2);
  long long w = mod_reduce(a11 - x, 2);
  long long z = mod_reduce(a21 - x - y, 2);
  if (!(sigma_family(x, y, z, w) == m)) throw math_error("matrix is not in the sigma family");
  return {x, y, z, w};
}

OrderRigidityResult verify_order_rigidity(long long p, int r, long long cap) {
  if (r < 1) throw math_error("r >= 1 required");
  long long pr = 1;
  for (int i = 0; i < r; ++i) {
    pr *= p;
    if (pr > (1LL << 30)) throw cap_exceeded("p^r too large");
  }
  long long pr1 = pr / p;  // p^{r-1}
  if (2 * pr * pr1 > cap) throw cap_exceeded("order rigidity scan cap exceeded");
  OrderRigidityResult res;
  res.square_case_ok = true;
  res.cube_case_ok = true;
  Mat2Mod id = Mat2Mod::identity(pr);
  // squares: sigma = [[e, a], [0, e + kp]], e = +-1
  for (long long e : {1LL, -1LL}) {
    for (long long a = 0; a < pr; ++a) {
      for (long long k = 0; k < pr1; ++k) {
        Mat2Mod s(pr, e, a, 0, e + k * p);
        if (mat_pow(s, 2) == id) {
          bool forced = (mod_reduce(a, pr) == 0) && (mod_reduce(k * p, pr) == 0);
          if (!forced && res.square_case_ok) {
            res.square_case_ok = false;
            if (!res.witness) res.witness = s;
          }
        }
      }
    }
  }
  // cubes: sigma = [[1, a], [0, 1 + kp]] with sigma^3 = Id must be Id
  for (long long a = 0; a < pr; ++a) {
    for (long long k = 0; k < pr1; ++k) {
      Mat2Mod s(pr, 1, a, 0, 1 + k * p);
      if (mat_pow(s, 3) == id && !(s == id)) {
        if (res.cube_case_ok) {
          res.cube_case_ok = false;
          if (!res.witness) res.witness = s;
        }
      }
    }
  }
  return res;
}

MatrixGroup stabilizer_enumeration(long long p, int r, StabilizerKind kind, long long cap) {
  if (p <= 3) throw math_error("p > 3 required");
  long long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  double total = static_cast<double>(pr) * pr * pr * pr;
  if (total > static_cast<double>(cap)) throw cap_exceeded("stabilizer scan cap exceeded");
  std::set<Mat2Mod> found;
  for (long long a = 0; a < pr; ++a)
    for (long long b = 0; b < pr; ++b)
      for (long long c = 0; c < pr; ++c)
        for (long long d = 0; d < pr; ++d) {
          // predicate on sigma e1 = first column
          bool col_plus = (a == 1 && c == 0);
          bool col_minus = (a == pr - 1 && c == 0);
          long long det = mod_reduce(a * d - b * c, pr);
          bool keep = false;
          switch (kind) {
            case StabilizerKind::PlusMinusP1Det1:
              keep = (col_plus || col_minus) && det == 1;
              break;
            case StabilizerKind::FixP1Det1:
              keep = col_plus && det == 1;
              break;
            case StabilizerKind::PlusMinusP1Det1ModP:
              keep = (col_plus || col_minus) && det % p == 1 % p;
              break;
          }
          if (keep) found.insert(Mat2Mod(pr, a, b, c, d));
        }
  MatrixGroup out;
  out.n = pr;
  out.elements.assign(found.begin(), found.end());
  // find a cyclic generator if one exists
  for (const auto& m : out.elements) {
    if (!mat_invertible(m)) continue;
    if (static_cast<size_t>(mat_order(m)) == out.elements.size()) {
      out.generators = {m};
      break;
    }
  }
  if (out.generators.empty() && !out.elements.empty()) out.generators = out.elements;
  return out;
}

namespace {

TorsionVec vec_add(const TorsionVec& a, const TorsionVec& b, long long n) {
  return {mod_reduce(a[0] + b[0], n), mod_reduce(a[1] + b[1], n)};
}

TorsionVec vec_sub(const TorsionVec& a, const TorsionVec& b, long long n) {
  return {mod_reduce(a[0] - b[0], n), mod_reduce(a[1] - b[1], n)};
}


// Extends generator values along a BFS of the closure; nullopt on conflict.
std::optional<std::vector<TorsionVec>> extend_cocycle(const MatrixGroup& g,
                                                      const std::vector<TorsionVec>& gen_values) {
  const long long n = g.n;
  std::vector<char> known(g.order(), 0);
  std::vector<TorsionVec> vals(g.order(), TorsionVec{0, 0});
  Mat2Mod id = Mat2Mod::identity(n);
  size_t id_idx = g.index_of(id);
  known[id_idx] = 1;
  std::deque<size_t> frontier{id_idx};
  while (!frontier.empty()) {
    size_t cur = frontier.front();
    frontier.pop_front();
    const Mat2Mod& e = g.elements[cur];
    for (size_t gi = 0; gi < g.generators.size(); ++gi) {
      Mat2Mod nxt = mat_mul(e, g.generators[gi]);
      size_t ni = g.index_of(nxt);
      TorsionVec v = vec_add(vals[cur], mat_apply(e, gen_values[gi]), n);
      if (known[ni]) {
        if (!(vals[ni] == v)) return std::nullopt;
      } else {
        known[ni] = 1;
        vals[ni] = v;
        frontier.push_back(ni);
      }
    }
  }
  // cocycle identity on (element, generator) pairs implies the full identity
  for (size_t i = 0; i < g.order(); ++i)
    for (size_t gi = 0; gi < g.generators.size(); ++gi) {
      Mat2Mod prod = mat_mul(g.elements[i], g.generators[gi]);
      TorsionVec want = vec_add(vals[i], mat_apply(g.elements[i], gen_values[gi]), n);
      if (!(vals[g.index_of(prod)] == want)) return std::nullopt;
    }
  return vals;
}

}  // namespace

Cocycle make_cocycle(std::shared_ptr<const MatrixGroup> group,
                     const std::map<Mat2Mod, TorsionVec>& generator_values) {
  std::vector<TorsionVec> gv;
  gv.reserve(group->generators.size());
  for (const auto& g : group->generators) {
    auto it = generator_values.find(g);
    if (it == generator_values.end()) throw math_error("missing generator value");
    gv.push_back(it->second);
  }
  auto vals = extend_cocycle(*group, gv);
  if (!vals) throw math_error("not a cocycle");
  return Cocycle{std::move(group), std::move(*vals)};
}

Cocycle make_cocycle_from_values(std::shared_ptr<const MatrixGroup> group,
                                 std::vector<TorsionVec> values) {
  if (values.size() != group->order()) throw math_error("value table size mismatch");
  const long long n = group->n;
  for (size_t i = 0; i < group->order(); ++i)
    for (size_t j = 0; j < group->order(); ++j) {
      Mat2Mod prod = mat_mul(group->elements[i], group->elements[j]);
      TorsionVec want = vec_add(values[i], mat_apply(group->elements[i], values[j]), n);
      if (!(values[group->index_of(prod)] == want)) throw math_error("not a cocycle");
    }
  return Cocycle{std::move(group), std::move(values)};
}

Cocycle zero_cocycle(std::shared_ptr<const MatrixGroup> group) {
  std::vector<TorsionVec> values(group->order(), TorsionVec{0, 0});
  return Cocycle{std::move(group), std::move(values)};
}

Cocycle coboundary(std::shared_ptr<const MatrixGroup> group, const TorsionVec& a) {
  std::vector<TorsionVec> values(group->order());
  for (size_t i = 0; i < group->order(); ++i)
    values[i] = vec_sub(mat_apply(group->elements[i], a), a, group->n);
  return Cocycle{std::move(group), std::move(values)};
}

std::vector<Mat2Mod> local_condition_check(const Cocycle& z) {
  const MatrixGroup& g = *z.group;
  const long long n = g.n;
  std::vector<Mat2Mod> failing;
  for (size_t i = 0; i < g.order(); ++i) {
    const Mat2Mod& s = g.elements[i];
    bool ok = false;
    for (long long a0 = 0; a0 < n && !ok; ++a0)
      for (long long a1 = 0; a1 < n && !ok; ++a1) {
        TorsionVec a{a0, a1};
        if (vec_sub(mat_apply(s, a), a, n) == z.values[i]) ok = true;
      }
    if (!ok) failing.push_back(s);
  }
  return failing;
}

namespace {

// Invariant factors of a finite abelian group from its element-order multiset:
// #{x : order(x) | p^k} = p^{sum_i min(k, lambda_i)} per prime p.
std::vector<long long> elementary_divisors_from_orders(const std::vector<long long>& orders,
                                                       long long exponent_bound) {
  std::vector<long long> divisors;
  if (orders.size() <= 1) return divisors;
  for (long long p = 2; p <= exponent_bound; ++p) {
    bool prime = true;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    std::vector<long long> s{0};  // s[k] = log_p #{x : order(x) | p^k}
    long long pk = 1;
    for (int k = 1; k <= 40; ++k) {
      pk *= p;
      size_t cnt = 0;
      for (long long o : orders)
        if (pk % o == 0) ++cnt;
      long long logc = 0;
      size_t c = cnt;
      while (c % static_cast<size_t>(p) == 0) {
        c /= static_cast<size_t>(p);
        ++logc;
      }
      if (c != 1) throw math_error("torsion count is not a prime power");
      s.push_back(logc);
      if (s[static_cast<size_t>(k)] == s[static_cast<size_t>(k) - 1]) break;
    }
    std::vector<long long> n_ge;  // n_ge[k-1] = #{i : lambda_i >= k}
    for (size_t k = 1; k < s.size(); ++k) n_ge.push_back(s[k] - s[k - 1]);
    n_ge.push_back(0);
    long long val = 1;
    for (size_t k = 1; k < n_ge.size(); ++k) {
      val *= p;
      long long exactly = n_ge[k - 1] - n_ge[k];
      for (long long i = 0; i < exactly; ++i) divisors.push_back(val);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

CohomologyReport h1_and_h1loc(std::shared_ptr<const MatrixGroup> group,
                              const CohomologyCaps& caps) {
  const MatrixGroup& g = *group;
  const long long n = g.n;
  if (g.order() > caps.max_group_order) throw cap_exceeded("group order cap exceeded");
  if (n > caps.max_modulus) throw cap_exceeded("modulus cap exceeded");
  const size_t ng = g.generators.size();
  double cand = 1;
  for (size_t i = 0; i < ng; ++i) cand *= static_cast<double>(n) * n;
  if (cand > static_cast<double>(caps.max_candidates))
    throw cap_exceeded("cocycle candidate cap exceeded");

  // Enumerate all cocycles by generator assignments.
  std::vector<std::vector<TorsionVec>> cocycles;
  std::vector<TorsionVec> assignment(ng, TorsionVec{0, 0});
  const size_t vec_count = static_cast<size_t>(n) * static_cast<size_t>(n);
  std::vector<TorsionVec> all_vecs;
  all_vecs.reserve(vec_count);
  for (long long a0 = 0; a0 < n; ++a0)
    for (long long a1 = 0; a1 < n; ++a1) all_vecs.push_back({a0, a1});
  size_t total = 1;
  for (size_t i = 0; i < ng; ++i) total *= vec_count;
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rest = idx;
    for (size_t i = 0; i < ng; ++i) {
      assignment[i] = all_vecs[rest % vec_count];
      rest /= vec_count;
    }
    auto vals = extend_cocycle(g, assignment);
    if (vals) cocycles.push_back(std::move(*vals));
  }
  std::sort(cocycles.begin(), cocycles.end());
  cocycles.erase(std::unique(cocycles.begin(), cocycles.end()), cocycles.end());

  // Coboundaries.
  std::vector<std::vector<TorsionVec>> cobs;
  for (const auto& a : all_vecs) {
    std::vector<TorsionVec> v(g.order());
    for (size_t i = 0; i < g.order(); ++i)
      v[i] = vec_sub(mat_apply(g.elements[i], a), a, n);
    cobs.push_back(std::move(v));
  }
  std::sort(cobs.begin(), cobs.end());
  cobs.erase(std::unique(cobs.begin(), cobs.end()), cobs.end());

  // Locally-trivial cocycles: per-sigma solvable local conditions.
  // Precompute, for each sigma, the set of achievable (sigma-1)A values.
  std::vector<std::set<TorsionVec>> images(g.order());
  for (size_t i = 0; i < g.order(); ++i)
    for (const auto& a : all_vecs)
      images[i].insert(vec_sub(mat_apply(g.elements[i], a), a, n));
  std::vector<std::vector<TorsionVec>> loc;
  for (const auto& z : cocycles) {
    bool ok = true;
    for (size_t i = 0; i < g.order() && ok; ++i)
      if (images[i].find(z[i]) == images[i].end()) ok = false;
    if (ok) loc.push_back(z);
  }

  auto coset_orders = [&](const std::vector<std::vector<TorsionVec>>& zs) {
    // orders of elements of zs / B^1 under pointwise addition
    std::set<std::vector<TorsionVec>> bset(cobs.begin(), cobs.end());
    auto add = [&](const std::vector<TorsionVec>& x, const std::vector<TorsionVec>& y) {
      std::vector<TorsionVec> out(x.size());
      for (size_t i = 0; i < x.size(); ++i) out[i] = vec_add(x[i], y[i], n);
      return out;
    };
    auto canon = [&](std::vector<TorsionVec> x) {
      std::vector<TorsionVec> best = x;
      for (const auto& b : cobs) {
        auto cand2 = add(x, b);
        if (cand2 < best) best = cand2;
      }
      return best;
    };
    std::set<std::vector<TorsionVec>> seen;
    std::vector<long long> orders;
    for (const auto& z : zs) {
      auto cz = canon(z);
      if (!seen.insert(cz).second) continue;
      // order of the coset [z]
      std::vector<TorsionVec> acc = z;
      long long o = 1;
      while (bset.find(acc) == bset.end()) {
        acc = add(acc, z);
        ++o;
        if (o > 4 * n) throw math_error("coset order runaway");
      }
      orders.push_back(o);
    }
    return orders;
  };

  CohomologyReport rep;
  rep.group_order = g.order();
  rep.cocycle_count = cocycles.size();
  rep.coboundary_count = cobs.size();
  rep.h1_order = cocycles.size() / cobs.size();
  rep.h1loc_order = loc.size() / cobs.size();
  rep.h1_elementary_divisors = elementary_divisors_from_orders(coset_orders(cocycles), n);
  rep.h1loc_elementary_divisors = elementary_divisors_from_orders(coset_orders(loc), n);
  return rep;
}

double density_threshold(const MatrixGroup& group) {
  if (group.elements.empty()) throw math_error("empty group");
  return 1.0 / static_cast<double>(group.order());
}

}  // namespace divlab
