#pragma once

// Ground truth for multiplier ideals and jumping numbers, independent of the
// closed formulas: J(a^c) is the complete ideal of the antinef closure of
// floor(c·D) - K, where D is the divisor cut out by the ideal.  Jumping
// numbers are found by scanning the candidate grid {k / (X_i·I)}, on which
// floor(c·D) is piecewise constant.

#include <algorithm>
#include <optional>
#include <vector>

#include "jumpnum/divisor.hpp"
#include "jumpnum/structure.hpp"

namespace jumpnum {

// Bundles everything derived from one point basis.  Immutable after
// construction; cheap to pass by reference everywhere.
class SimpleIdeal {
 public:
  explicit SimpleIdeal(PointBasis b)
      : basis_(std::move(b)),
        prox_(proximity_from_point_basis(basis_)),
        gs_(classify(prox_)) {
    int n = prox_.n;
    canonical_ = canonical_divisor(prox_).d;
    valuation_.resize(n);
    for (int i = 1; i <= n; ++i) valuation_[i - 1] = dot(prox_, i, n);
    self_intersection_ = valuation_[n - 1];  // X_n·X_n = I·I
  }

  const PointBasis& basis() const { return basis_; }
  const ProximityMatrix& prox() const { return prox_; }
  const GammaStructure& structure() const { return gs_; }
  int n() const { return prox_.n; }
  // K in E coordinates
  const IntVec& canonical() const { return canonical_; }
  // v(a) = (X_1·I, ..., X_n·I); also the E coordinates of the divisor of a
  const IntVec& valuation() const { return valuation_; }
  const Int& self_intersection() const { return self_intersection_; }

 private:
  PointBasis basis_;
  ProximityMatrix prox_;
  GammaStructure gs_;
  IntVec canonical_;
  IntVec valuation_;
  Int self_intersection_;
};

struct MultiplierIdeal {
  Rat exponent;
  CompleteIdealVector ideal;
};

namespace detail {

inline IntVec floor_cd_minus_k(const SimpleIdeal& a, const Rat& c) {
  IntVec d(a.n());
  for (int i = 0; i < a.n(); ++i) d[i] = rat_floor(c * a.valuation()[i]) - a.canonical()[i];
  return d;
}

}  // namespace detail

inline MultiplierIdeal multiplier_ideal(const SimpleIdeal& a, const Rat& c) {
  if (c < 0) fail(errc::negative_exponent, "exponent " + to_string(c));
  Divisor closed = antinef_closure(make_divisor(a.prox(), detail::floor_cd_minus_k(a, c)));
  return MultiplierIdeal{c, ideal_of_divisor(closed)};
}

inline MultiplierIdeal multiplier_ideal(const PointBasis& b, const Rat& c) {
  return multiplier_ideal(SimpleIdeal(b), c);
}

// Valuation vector of the product ideal prod p_i^{r_i}: entries R~·X_j
inline IntVec product_valuation(const SimpleIdeal& a, const IntVec& r) {
  if ((int)r.size() != a.n()) fail(errc::dimension_mismatch, "R length");
  IntVec rt(a.n(), 0);  // R~ = R P^{-1} = sum r_i X_i
  for (int i = 1; i <= a.n(); ++i) {
    if (r[i - 1] < 0) fail(errc::dimension_mismatch, "R must be nonnegative");
    if (r[i - 1] == 0) continue;
    const IntVec& xi = a.prox().row(i);
    for (int j = 0; j < a.n(); ++j) rt[j] += r[i - 1] * xi[j];
  }
  IntVec val(a.n(), 0);
  for (int j = 1; j <= a.n(); ++j) {
    const IntVec& xj = a.prox().row(j);
    for (int k = 0; k < a.n(); ++k) val[j - 1] += rt[k] * xj[k];
  }
  return val;
}

// c_R = min_i (R~·X_i + ΣX_i + 1) / (X_i·I), over all rows
inline Rat c_R_direct(const SimpleIdeal& a, const IntVec& r) {
  IntVec rtx = product_valuation(a, r);  // R~·X_i
  std::optional<Rat> best;
  for (int i = 1; i <= a.n(); ++i) {
    Rat v(rtx[i - 1] + row_sum(a.prox(), i) + 1, a.valuation()[i - 1]);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// Same minimum taken only over the star rows and the last one
inline Rat c_R_reduced(const SimpleIdeal& a, const IntVec& r) {
  IntVec rtx = product_valuation(a, r);
  std::optional<Rat> best;
  for (int nu = 1; nu <= a.structure().g_star + 1; ++nu) {
    int i = a.structure().gamma_at(nu);
    Rat v(rtx[i - 1] + row_sum(a.prox(), i) + 1, a.valuation()[i - 1]);
    if (!best || v < *best) best = v;
  }
  return *best;
}

namespace detail {

// Ascending candidate exponents k/(X_i·I) in (0, bound]
inline std::vector<Rat> candidate_grid(const SimpleIdeal& a, const Rat& bound) {
  std::vector<Rat> grid;
  for (int i = 0; i < a.n(); ++i) {
    const Int& v = a.valuation()[i];
    Int kmax = rat_floor(bound * v);
    for (Int k = 1; k <= kmax; ++k) grid.emplace_back(k, v);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// Walks the grid keeping the current multiplier-ideal divisor.  Restarting
// the closure from the previous one is sound: closures are monotone in c,
// so max(floor(cD)-K, previous) still lies under the target closure.
class MultiplierScan {
 public:
  explicit MultiplierScan(const SimpleIdeal& a, bool warm_start = true)
      : a_(a), warm_(warm_start), cur_(a.n(), 0) {}

  const IntVec& advance_to(const Rat& c) {
    IntVec d = floor_cd_minus_k(a_, c);
    if (warm_)
      for (int i = 0; i < a_.n(); ++i)
        if (cur_[i] > d[i]) d[i] = cur_[i];
    Divisor closed = antinef_closure(make_divisor(a_.prox(), std::move(d)));
    cur_ = std::move(closed.d);
    return cur_;
  }

 private:
  const SimpleIdeal& a_;
  bool warm_;
  IntVec cur_;
};

}  // namespace detail

inline std::vector<Rat> oracle_jumping_numbers(const SimpleIdeal& a, const Rat& bound,
                                               bool warm_start = true) {
  if (bound <= 0) fail(errc::nonpositive_bound, "bound " + to_string(bound));
  std::vector<Rat> jumps;
  detail::MultiplierScan scan(a, warm_start);
  IntVec prev(a.n(), 0);  // J(a^0) is the unit ideal
  for (const Rat& c : detail::candidate_grid(a, bound)) {
    const IntVec& cur = scan.advance_to(c);
    if (cur != prev) jumps.push_back(c);
    prev = cur;
  }
  return jumps;
}

inline std::vector<Rat> oracle_jumping_numbers(const PointBasis& b, const Rat& bound) {
  return oracle_jumping_numbers(SimpleIdeal(b), bound);
}

// Definitional scan: the first candidate c with J(a^c) not containing the
// product ideal b_R, testing containment by valuation vectors.
inline Rat c_R_definitional(const SimpleIdeal& a, const IntVec& r) {
  IntVec vb = product_valuation(a, r);
  Rat window = 1;
  for (int rounds = 0; rounds < 64; ++rounds) {
    detail::MultiplierScan scan(a);
    for (const Rat& c : detail::candidate_grid(a, window)) {
      const IntVec& cur = scan.advance_to(c);
      for (int i = 0; i < a.n(); ++i)
        if (cur[i] > vb[i]) return c;  // J(a^c) ⊉ b_R
    }
    window *= 2;
  }
  fail(errc::internal_error, "containment never failed");
}

}  // namespace jumpnum
