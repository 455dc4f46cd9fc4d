#pragma once

// Puiseux exponents β'_ν = (a_{γ_{ν-1}} + ... + a_{τ_ν}) / a_{γ_{ν-1}} and
// the inverse construction: descending Euclidean division recovers the whole
// multiplicity sequence from the exponents.

#include <vector>

#include "jumpnum/structure.hpp"

namespace jumpnum {

inline std::vector<Rat> puiseux_exponents(const PointBasis& b) {
  ProximityMatrix P = proximity_from_point_basis(b);
  GammaStructure gs = classify(P);
  std::vector<Rat> out;
  out.reserve(gs.g + 1);
  for (int nu = 1; nu <= gs.g + 1; ++nu) {
    const RunBlock& blk = gs.blocks[nu - 1];
    out.emplace_back(blk.s0, b.at(gs.gamma_at(nu - 1)));
  }
  return out;
}

namespace detail {

// Multiplicities a_{γ_{ν-1}}, ..., a_{γ_ν} from the starting pair
// (s_0, s_1) = (aγ·num(β'), aγ·den(β')): divide down, the final quotient
// short by one so the remainder chain ends at gcd(s_0, s_1) = a_{γ_ν}.
inline IntVec euclid_block(Int s_prev, Int s_cur) {
  IntVec out;
  if (s_prev < s_cur) fail(errc::inconsistent_exponents, "exponent below one");
  while (true) {
    Int q = s_prev / s_cur, rem = s_prev % s_cur;
    if (rem == 0) {
      for (Int i = 0; i < q; ++i) out.push_back(s_cur);
      return out;
    }
    for (Int i = 0; i < q; ++i) out.push_back(s_cur);
    s_prev = s_cur;
    s_cur = rem;
  }
}

}  // namespace detail

inline PointBasis point_basis_from_puiseux(const std::vector<Rat>& beta) {
  if (beta.empty()) fail(errc::inconsistent_exponents, "empty exponent list");
  int k = (int)beta.size();
  for (const Rat& q : beta)
    if (q < 1) fail(errc::inconsistent_exponents, "exponent " + to_string(q) + " below one");

  // a_{γ_ν} chain, descending from a at the last index = 1
  IntVec ag(k + 1);
  ag[k] = 1;
  for (int nu = k; nu >= 1; --nu) ag[nu - 1] = ag[nu] * rat_den(beta[nu - 1]);

  IntVec basis;
  for (int nu = 1; nu <= k; ++nu) {
    Int s0 = ag[nu] * rat_num(beta[nu - 1]);
    Int s1 = ag[nu - 1];
    // covers positions γ_{ν-1}..γ_ν; the closing a_{γ_ν} = gcd(s0, s1) is
    // the last entry the division emits
    IntVec block = detail::euclid_block(s0, s1);
    if (basis.empty()) {
      basis = block;
    } else {
      if (basis.back() != block.front())
        fail(errc::inconsistent_exponents, "blocks do not glue");
      basis.insert(basis.end(), block.begin() + 1, block.end());
    }
  }

  PointBasis b = validate_point_basis(basis);
  // canonical-form check: the reconstruction must reproduce the input,
  // possibly extended by the trailing exponent 1 of a satellite last point
  std::vector<Rat> again = puiseux_exponents(b);
  bool ok = (again == beta);
  if (!ok && (int)again.size() == k + 1 && again.back() == 1) {
    again.pop_back();
    ok = (again == beta);
  }
  if (!ok) fail(errc::inconsistent_exponents, "exponents are not in canonical form");
  return b;
}

}  // namespace jumpnum
