#pragma once

// Point bases of simple complete ideals in a two-dimensional regular local
// ring, and the proximity matrices encoding which base points are proximate
// to which.  The two encodings are equivalent; conversions are exact.
//
// Indexing: every public index is 1-based.  Storage is 0-based internally.

#include <utility>
#include <vector>

#include "jumpnum/errors.hpp"
#include "jumpnum/rational.hpp"

namespace jumpnum {

class PointBasis {
 public:
  int n() const { return (int)a_.size(); }
  const IntVec& values() const { return a_; }
  const Int& at(int i) const {  // a_i, 1 <= i <= n
    if (i < 1 || i > n()) fail(errc::index_out_of_range, "point index " + std::to_string(i));
    return a_[i - 1];
  }
  bool operator==(const PointBasis& o) const { return a_ == o.a_; }

  friend PointBasis validate_point_basis(const IntVec& raw);

 private:
  explicit PointBasis(IntVec a) : a_(std::move(a)) {}
  IntVec a_;
};

// Proximity matrix P (unipotent lower triangular, off-diagonal entries 0/-1)
// together with its inverse, whose rows are the point bases of the simple
// ideals p_1 ⊃ ... ⊃ p_n, and the symmetric form PᵀP describing the
// exceptional intersection lattice.
struct ProximityMatrix {
  int n = 0;
  std::vector<std::vector<int>> p;    // P
  std::vector<IntVec> x;              // P^{-1}, entries nonnegative
  std::vector<std::vector<Int>> ptp;  // PᵀP; diagonal = vertex weights
  std::vector<std::vector<int>> adj;  // tree adjacency from PᵀP (0-based lists)

  const IntVec& row(int i) const {  // X_i
    check_index(i);
    return x[i - 1];
  }
  const Int& entry(int i, int j) const {  // x_{i,j}
    check_index(i);
    check_index(j);
    return x[i - 1][j - 1];
  }
  bool proximate(int i, int j) const {  // i ≻ j
    check_index(i);
    check_index(j);
    return i > j && p[i - 1][j - 1] == -1;
  }
  // max{ν : ν ≻ j}, or j itself when nothing is proximate to j
  int max_proximate_to(int j) const {
    check_index(j);
    int m = j;
    for (int i = j + 1; i <= n; ++i)
      if (p[i - 1][j - 1] == -1) m = i;
    return m;
  }
  int weight(int i) const {  // w_i = 1 + #{ν : ν ≻ i} = (PᵀP)_{ii}
    check_index(i);
    return ptp[i - 1][i - 1].convert_to<int>();
  }
  bool same_context(const ProximityMatrix& o) const { return this == &o || p == o.p; }
  void check_index(int i) const {
    if (i < 1 || i > n) fail(errc::index_out_of_range, "point index " + std::to_string(i));
  }
};

namespace detail {

// For each i < n, the prefix-sum target k with a_i = a_{i+1} + ... + a_k.
// Unique because the partial sums are strictly increasing.
inline std::vector<int> proximity_targets(const IntVec& a) {
  int n = (int)a.size();
  std::vector<int> target(n + 1, 0);
  for (int i = 1; i < n; ++i) {
    Int s = 0;
    int k = -1;
    for (int j = i + 1; j <= n; ++j) {
      s += a[j - 1];
      if (s == a[i - 1]) {
        k = j;
        break;
      }
      if (s > a[i - 1]) break;
    }
    if (k < 0)
      fail(errc::not_simple,
           "no k with a_" + std::to_string(i) + " = a_" + std::to_string(i + 1) + " + ... + a_k");
    target[i] = k;
  }
  return target;
}

inline std::vector<IntVec> invert_unipotent(const std::vector<std::vector<int>>& p) {
  int n = (int)p.size();
  std::vector<IntVec> x(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    x[i][i] = 1;
    for (int j = i - 1; j >= 0; --j) {
      Int s = 0;
      for (int k = j + 1; k <= i; ++k) s += x[i][k] * p[k][j];
      x[i][j] = -s;
    }
  }
  return x;
}

}  // namespace detail

inline PointBasis validate_point_basis(const IntVec& raw) {
  if (raw.empty()) fail(errc::not_simple, "empty multiplicity vector");
  int n = (int)raw.size();
  for (int i = 1; i <= n; ++i)
    if (raw[i - 1] <= 0) fail(errc::not_positive, "a_" + std::to_string(i) + " = " + raw[i - 1].str());
  if (raw.back() != 1) fail(errc::not_simple, "a_n != 1");
  for (int i = 1; i < n; ++i)
    if (raw[i - 1] < raw[i])
      fail(errc::not_simple, "multiplicities increase at position " + std::to_string(i + 1));

  auto target = detail::proximity_targets(raw);
  // a point may be proximate to its predecessor plus at most one earlier point
  std::vector<int> count(n + 1, 0);
  for (int i = 1; i < n; ++i)
    for (int v = i + 1; v <= target[i]; ++v) ++count[v];
  for (int v = 2; v <= n; ++v)
    if (count[v] > 2)
      fail(errc::inconsistent_proximity,
           "point " + std::to_string(v) + " would be proximate to three earlier points");
  return PointBasis(raw);
}

inline ProximityMatrix proximity_from_point_basis(const PointBasis& b) {
  int n = b.n();
  auto target = detail::proximity_targets(b.values());
  ProximityMatrix P;
  P.n = n;
  P.p.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) P.p[i][i] = 1;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= target[j]; ++i) P.p[i - 1][j - 1] = -1;

  P.x = detail::invert_unipotent(P.p);

  P.ptp.assign(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int s = 0;
      for (int k = 0; k < n; ++k) s += P.p[k][i] * P.p[k][j];
      P.ptp[i][j] = s;
    }
  P.adj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && P.ptp[i][j] != 0) P.adj[i].push_back(j);
  return P;
}

inline PointBasis point_basis_from_proximity(const ProximityMatrix& P) {
  return validate_point_basis(P.row(P.n));
}

// Build a proximity matrix from explicit relations: i ≻ i-1 is implicit,
// satellite relations are pairs (i, j) with j <= i-2.  Validated by
// round-tripping through the point basis.
inline ProximityMatrix proximity_from_relations(int n,
                                                const std::vector<std::pair<int, int>>& satellite) {
  if (n < 1) fail(errc::inconsistent_proximity, "n must be positive");
  std::vector<int> sat_target(n + 1, 0);
  for (auto [i, j] : satellite) {
    if (i < 3 || i > n || j < 1 || j > i - 2)
      fail(errc::inconsistent_proximity,
           "relation " + std::to_string(i) + ">" + std::to_string(j) + " is not a satellite pair");
    if (sat_target[i] != 0)
      fail(errc::inconsistent_proximity,
           "point " + std::to_string(i) + " would be proximate to three earlier points");
    sat_target[i] = j;
  }
  std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) p[i][i] = 1;
  for (int i = 2; i <= n; ++i) {
    p[i - 1][i - 2] = -1;
    if (int j = sat_target[i]; j != 0) p[i - 1][j - 1] = -1;
  }
  // recover the basis from the bottom row of the inverse and re-derive;
  // catches relations not realizable by a blow-up sequence
  IntVec basis = detail::invert_unipotent(p).back();
  PointBasis b = validate_point_basis(basis);
  ProximityMatrix P = proximity_from_point_basis(b);
  if (P.p != p)
    fail(errc::inconsistent_proximity, "relations are not realizable by a blow-up sequence");
  return P;
}

}  // namespace jumpnum
