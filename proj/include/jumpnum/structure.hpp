#pragma once

// Combinatorial structure attached to a proximity matrix: free and satellite
// points, terminal satellites γ_1 < ... < γ_g, terminal free points
// τ_1 < ... < τ_g, the run-length decomposition of the multiplicity sequence
// between consecutive terminal satellites, the κ position table, and the
// index set U singling out the rows where truncated products degenerate.

#include <vector>

#include "jumpnum/point_basis.hpp"

namespace jumpnum {

struct RunBlock {
  IntVec s;            // distinct multiplicity values, strictly decreasing
  std::vector<int> r;  // run lengths; the last value occurs r.back()+1 times
  Int s0;              // a_{γ_{ν-1}} + ... + a_{τ_ν}
  int m() const { return (int)s.size(); }
};

class GammaStructure {
 public:
  int n = 0;
  int g = 0;       // number of terminal satellites
  int g_star = 0;  // those below n
  std::vector<bool> satellite;        // [i-1]: point i is a satellite
  std::vector<int> gamma;             // γ_1..γ_g
  std::vector<int> tau;               // τ_1..τ_g
  std::vector<int> gamma_star;        // Γ* = {γ ∈ Γ : γ < n}
  std::vector<RunBlock> blocks;       // ν = 1..g+1
  std::vector<std::vector<int>> kappa;  // kappa[ν-1][μ], κ_{ν,0} = γ_{ν-1}-1
  std::vector<bool> in_U;             // [i-1]: i ∈ U

  // γ_ν with the conventions γ_0 = 1 and γ_{g+1} = n; valid for 0..g+1,
  // and in particular γ_{g*+1} = n either way.
  int gamma_at(int nu) const {
    if (nu == 0) return 1;
    if (nu == g + 1) return n;
    if (nu < 0 || nu > g + 1) fail(errc::index_out_of_range, "gamma index " + std::to_string(nu));
    return gamma[nu - 1];
  }
  int tau_at(int nu) const {
    if (nu == 0) return 1;
    if (nu == g + 1) return n;
    if (nu < 0 || nu > g + 1) fail(errc::index_out_of_range, "tau index " + std::to_string(nu));
    return tau[nu - 1];
  }
  bool is_monomial() const { return gamma_star.empty(); }
};

inline GammaStructure classify(const ProximityMatrix& P) {
  GammaStructure gs;
  int n = gs.n = P.n;
  gs.satellite.assign(n, false);
  for (int i = 3; i <= n; ++i) {
    int cnt = 0;
    for (int j = 1; j < i; ++j)
      if (P.proximate(i, j)) ++cnt;
    gs.satellite[i - 1] = (cnt == 2);
  }
  for (int i = 1; i <= n; ++i)
    if (gs.satellite[i - 1] && (i == n || !gs.satellite[i])) gs.gamma.push_back(i);
  gs.g = (int)gs.gamma.size();
  for (int x : gs.gamma)
    if (x < n) gs.gamma_star.push_back(x);
  gs.g_star = (int)gs.gamma_star.size();
  if (gs.g > 0) {
    for (int i = 1; i < gs.gamma.back(); ++i)
      if (!gs.satellite[i - 1] && gs.satellite[i]) gs.tau.push_back(i);
    if ((int)gs.tau.size() != gs.g)
      fail(errc::internal_error, "terminal free/satellite interleaving broken");
  }

  const IntVec& a = P.row(n);
  gs.blocks.resize(gs.g + 1);
  gs.kappa.resize(gs.g + 1);
  int base = 0;
  for (int nu = 1; nu <= gs.g + 1; ++nu) {
    int lo = gs.gamma_at(nu - 1), hi = gs.gamma_at(nu);
    RunBlock blk;
    for (int i = lo; i <= hi; ++i) {
      if (!blk.s.empty() && blk.s.back() == a[i - 1]) {
        ++blk.r.back();
      } else {
        blk.s.push_back(a[i - 1]);
        blk.r.push_back(1);
      }
    }
    --blk.r.back();  // the terminal value a_{γ_ν} itself opens the next block
    blk.s0 = 0;
    for (int i = lo; i <= gs.tau_at(nu); ++i) blk.s0 += a[i - 1];
    std::vector<int>& krow = gs.kappa[nu - 1];
    krow.push_back(base);
    for (int rj : blk.r) krow.push_back(krow.back() + rj);
    base = krow.back();
    gs.blocks[nu - 1] = std::move(blk);
  }

  gs.in_U.assign(n, false);
  gs.in_U[n - 1] = true;
  for (int nu = 1; nu <= gs.g + 1; ++nu) {
    const auto& krow = gs.kappa[nu - 1];
    for (int mu = 1; mu < (int)krow.size(); mu += 2)
      for (int i = krow[mu - 1] + 1; i <= krow[mu]; ++i) gs.in_U[i - 1] = true;
  }
  return gs;
}

// ρ_{i,γ_ν} = x_{i,γ_ν+1} + ... + x_{i,τ_{ν+1}}, zero when i <= γ_ν.
inline Int rho(const ProximityMatrix& P, const GammaStructure& gs, int i, int nu) {
  P.check_index(i);
  if (nu < 0 || nu > gs.g) fail(errc::index_out_of_range, "rho block index " + std::to_string(nu));
  int gnu = gs.gamma_at(nu);
  if (i <= gnu) return 0;
  Int s = 0;
  const IntVec& xi = P.row(i);
  for (int j = gnu + 1; j <= gs.tau_at(nu + 1); ++j) s += xi[j - 1];
  return s;
}

inline Int dot_range(const ProximityMatrix& P, int i, int j, int lo, int hi) {
  P.check_index(i);
  P.check_index(j);
  if (lo < 1 || hi > P.n) fail(errc::index_out_of_range, "truncation range");
  Int s = 0;
  const IntVec& xi = P.row(i);
  const IntVec& xj = P.row(j);
  for (int k = lo; k <= hi; ++k) s += xi[k - 1] * xj[k - 1];
  return s;
}

inline Int dot(const ProximityMatrix& P, int i, int j) { return dot_range(P, i, j, 1, P.n); }

inline Int dot_prefix(const ProximityMatrix& P, int i, int j, int k) {
  return dot_range(P, i, j, 1, k);
}

// [X_i·X_j]_ν, the piece over columns (γ_ν, γ_{ν+1}]
inline Int dot_bracket(const ProximityMatrix& P, const GammaStructure& gs, int i, int j, int nu) {
  if (nu < 0 || nu > gs.g) fail(errc::index_out_of_range, "bracket index " + std::to_string(nu));
  return dot_range(P, i, j, gs.gamma_at(nu) + 1, gs.gamma_at(nu + 1));
}

inline Int row_sum(const ProximityMatrix& P, int i) {
  Int s = 0;
  for (const Int& v : P.row(i)) s += v;
  return s;
}

}  // namespace jumpnum
