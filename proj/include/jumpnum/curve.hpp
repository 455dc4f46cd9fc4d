#pragma once

// Analytically irreducible plane curves, given by equisingularity data: the
// multiplicity sequence (the point basis truncated at the last terminal
// satellite), characteristic exponents and pairs, and the translation
// between curve jumping numbers and ideal jumping numbers.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "jumpnum/jumping.hpp"

namespace jumpnum {

struct MultiplicitySequence {
  IntVec m;
  int length() const { return (int)m.size(); }
  bool operator==(const MultiplicitySequence&) const = default;
};

struct CharacteristicPairs {
  std::vector<std::pair<Int, Int>> pairs;  // (m_k, n_k), k = 1..g
  int genus() const { return (int)pairs.size(); }
  bool operator==(const CharacteristicPairs&) const = default;
};

struct EquisingularityClass {
  MultiplicitySequence curve;
  Int t = 0;  // extra free points beyond the standard resolution
};

// A multiplicity sequence is exactly a point basis whose last point is the
// last terminal satellite (or the single point of a smooth branch).
inline MultiplicitySequence validate_multiplicity_sequence(const IntVec& raw) {
  PointBasis b = [&] {
    try {
      return validate_point_basis(raw);
    } catch (const error& e) {
      fail(errc::invalid_sequence, e.what());
    }
  }();
  GammaStructure gs = classify(proximity_from_point_basis(b));
  if (gs.g == 0) {
    if (b.n() != 1) fail(errc::invalid_sequence, "free tail after the last satellite");
  } else if (gs.gamma.back() != b.n()) {
    fail(errc::invalid_sequence, "sequence does not end at its last terminal satellite");
  }
  return MultiplicitySequence{b.values()};
}

inline PointBasis ideal_from_class(const EquisingularityClass& ec) {
  if (ec.t < 0) fail(errc::invalid_sequence, "negative free-point count");
  MultiplicitySequence ms = validate_multiplicity_sequence(ec.curve.m);
  IntVec a = ms.m;
  a.insert(a.end(), ec.t.convert_to<std::size_t>(), Int(1));
  return validate_point_basis(a);
}

// β_0 = a_1, β_k = β_{k-1} + ρ_{n,γ_{k-1}};  gcd(β_0..β_k) = a_{γ_k}.
inline IntVec characteristic_exponents(const MultiplicitySequence& ms) {
  validate_multiplicity_sequence(ms.m);
  SimpleIdeal a{validate_point_basis(ms.m)};
  const GammaStructure& gs = a.structure();
  IntVec beta{a.basis().at(1)};
  for (int k = 1; k <= gs.g; ++k)
    beta.push_back(beta.back() + rho(a.prox(), gs, a.n(), k - 1));
  Int g = beta[0];
  for (int k = 0; k <= gs.g; ++k) {
    g = boost::multiprecision::gcd(g, beta[k]);
    if (g != a.basis().at(gs.gamma_at(k)))
      fail(errc::internal_error, "characteristic exponent gcd chain broken");
  }
  return beta;
}

// (m_k, n_k) = (β_k / a_{γ_k}, x_{γ_k, γ_{k-1}})
inline CharacteristicPairs pairs_from_sequence(const MultiplicitySequence& ms) {
  SimpleIdeal a{validate_point_basis(ms.m)};
  const GammaStructure& gs = a.structure();
  IntVec beta = characteristic_exponents(ms);
  CharacteristicPairs cp;
  for (int k = 1; k <= gs.g; ++k) {
    const Int& ag = a.basis().at(gs.gamma_at(k));
    if (beta[k] % ag != 0) fail(errc::internal_error, "m_k not integral");
    cp.pairs.emplace_back(beta[k] / ag, a.prox().entry(gs.gamma_at(k), gs.gamma_at(k - 1)));
  }
  return cp;
}

inline MultiplicitySequence sequence_from_pairs(const CharacteristicPairs& cp) {
  int g = cp.genus();
  if (g == 0) return MultiplicitySequence{{Int(1)}};  // smooth branch
  for (int k = 1; k <= g; ++k) {
    auto [mk, nk] = cp.pairs[k - 1];
    if (nk < 2) fail(errc::invalid_pairs, "n_" + std::to_string(k) + " must be at least 2");
    if (boost::multiprecision::gcd(mk, nk) != 1)
      fail(errc::invalid_pairs, "m_" + std::to_string(k) + ", n_" + std::to_string(k) + " not coprime");
  }
  // a_{γ_k} = n_{k+1}···n_g;  β_k = m_k a_{γ_k};  β_0 = n_1···n_g
  IntVec ag(g + 1);
  ag[g] = 1;
  for (int k = g; k >= 1; --k) ag[k - 1] = ag[k] * cp.pairs[k - 1].second;
  IntVec beta{ag[0]};
  for (int k = 1; k <= g; ++k) beta.push_back(cp.pairs[k - 1].first * ag[k]);
  std::vector<Rat> puis;
  for (int k = 1; k <= g; ++k) {
    Int step = beta[k] - beta[k - 1];
    if (step <= 0) fail(errc::invalid_pairs, "characteristic exponents must increase");
    puis.push_back(1 + Rat(step, ag[k - 1]));
  }
  MultiplicitySequence ms = [&] {
    try {
      return MultiplicitySequence{point_basis_from_puiseux(puis).values()};
    } catch (const error& e) {
      fail(errc::invalid_pairs, e.what());
    }
  }();
  validate_multiplicity_sequence(ms.m);
  if (!(pairs_from_sequence(ms) == cp)) fail(errc::invalid_pairs, "pairs are not in canonical form");
  return ms;
}

// Generator pairs straight from the characteristic pairs:
// φ_1 = m_1, φ_i = m_i - n_i m_{i-1},
// b_k = Σ_{i=1}^{k+1} (n_{i+1}···n_g)(n_i···n_k) φ_i.
inline JumpingSetDescription pairs_to_generators(const CharacteristicPairs& cp) {
  int g = cp.genus();
  if (g == 0) return JumpingSetDescription{{{Int(1), Int(1)}}, {}};
  for (int k = 1; k <= g; ++k)
    if (cp.pairs[k - 1].second < 2) fail(errc::invalid_pairs, "n_k must be at least 2");
  IntVec ag(g + 1);
  ag[g] = 1;
  for (int k = g; k >= 1; --k) ag[k - 1] = ag[k] * cp.pairs[k - 1].second;
  IntVec phi(g + 1);
  phi[1] = cp.pairs[0].first;
  for (int i = 2; i <= g; ++i) {
    phi[i] = cp.pairs[i - 1].first - cp.pairs[i - 1].second * cp.pairs[i - 2].first;
    if (phi[i] <= 0) fail(errc::invalid_pairs, "phi_" + std::to_string(i) + " not positive");
  }
  JumpingSetDescription d;
  for (int k = 0; k <= g - 1; ++k) {
    Int b = 0;
    for (int i = 1; i <= k + 1; ++i) {
      Int inner = 1;  // n_i ··· n_k
      for (int j = i; j <= k; ++j) inner *= cp.pairs[j - 1].second;
      b += ag[i] * inner * phi[i];
    }
    d.pairs.emplace_back(ag[k], b);
    if (k < g - 1) d.caps.push_back(ag[k + 1]);
  }
  return d;
}

// Curve jumping numbers: the t = 0 ideal's jumps in (0,1), together with 1,
// repeated with all integer shifts up to the bound.  Independent of t.
inline std::vector<Rat> curve_jumping_numbers(const EquisingularityClass& ec, const Rat& bound) {
  if (bound <= 0) fail(errc::nonpositive_bound, "bound " + to_string(bound));
  MultiplicitySequence ms = validate_multiplicity_sequence(ec.curve.m);
  JumpingSetDescription d = generators(validate_point_basis(ms.m));
  std::vector<Rat> seeds{1};
  for (const Jump& j : enumerate_jumps(d, 1))
    if (j.value < 1) seeds.push_back(j.value);
  std::set<Rat> out;
  for (const Rat& c : seeds)
    for (Rat v = c; v <= bound; v += 1) out.insert(v);
  return {out.begin(), out.end()};
}

// Ideal jumps from curve jumps and the valuation v(a):
// H_a = (H_C \ {1}) ∪ {1 + (k+1)/v}.
inline std::vector<Rat> ideal_jumps_from_curve(const std::vector<Rat>& curve_jumps, const Int& v,
                                               const Rat& bound) {
  if (bound <= 0) fail(errc::nonpositive_bound, "bound " + to_string(bound));
  if (v < 1) fail(errc::malformed_jump_set, "valuation must be positive");
  if (bound >= 1 && !std::count(curve_jumps.begin(), curve_jumps.end(), Rat(1)))
    fail(errc::malformed_jump_set, "1 is a jumping number of every curve");
  std::set<Rat> out;
  for (const Rat& c : curve_jumps) {
    if (c <= 0 || c > bound) fail(errc::malformed_jump_set, "curve jump outside (0, bound]");
    if (c != 1) out.insert(c);
  }
  for (Int k = 0; 1 + Rat(k + 1, v) <= bound; ++k) out.insert(1 + Rat(k + 1, v));
  return {out.begin(), out.end()};
}

// Steps of the jump-set inversion below one; no tail reconstruction.
inline MultiplicitySequence equisingularity_from_jumps(std::vector<Rat> jumps_below_one) {
  std::sort(jumps_below_one.begin(), jumps_below_one.end());
  jumps_below_one.erase(std::unique(jumps_below_one.begin(), jumps_below_one.end()),
                        jumps_below_one.end());
  for (const Rat& c : jumps_below_one)
    if (c <= 0 || c >= 1)
      fail(errc::malformed_jump_set, "jump " + to_string(c) + " outside (0,1)");

  IntVec seq;
  if (jumps_below_one.empty()) {
    seq = {1};
  } else if (jumps_below_one.size() == 1) {
    seq = {2, 1, 1};
  } else if (jumps_below_one.size() == 2) {
    seq = {2, 2, 1, 1};
  } else {
    Int a0;
    try {
      a0 = order_from_three_smallest(jumps_below_one[0], jumps_below_one[1], jumps_below_one[2]);
    } catch (const error& e) {
      fail(errc::malformed_jump_set, std::string("order step failed: ") + e.what());
    }
    seq = detail::prefix_from_pairs(detail::pair_chain(jumps_below_one, a0)).values();
  }
  MultiplicitySequence ms = [&] {
    try {
      return validate_multiplicity_sequence(seq);
    } catch (const error& e) {
      fail(errc::malformed_jump_set, std::string("reconstructed sequence invalid: ") + e.what());
    }
  }();
  // completeness check against the reconstructed class
  std::vector<Rat> again;
  for (const Jump& j : enumerate_jumps(generators(validate_point_basis(ms.m)), 1))
    if (j.value < 1) again.push_back(j.value);
  if (again != jumps_below_one)
    fail(errc::malformed_jump_set, "list is not the sub-one jump set of any branch");
  return ms;
}

// v(a) = Σ m_i² + (n - γ_g), recovering the sequence from the jumps first.
inline std::vector<Rat> ideal_jumps_from_curve_with_length(const std::vector<Rat>& curve_jumps,
                                                           const Int& n, const Rat& bound) {
  std::vector<Rat> below;
  for (const Rat& c : curve_jumps)
    if (c < 1) below.push_back(c);
  MultiplicitySequence ms = equisingularity_from_jumps(below);
  if (n < ms.length()) fail(errc::malformed_jump_set, "n smaller than the sequence length");
  Int v = n - ms.length();
  for (const Int& m : ms.m) v += m * m;
  return ideal_jumps_from_curve(curve_jumps, v, bound);
}

}  // namespace jumpnum
