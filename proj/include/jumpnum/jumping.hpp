#pragma once

// Closed-form description of the jumping-number set of a simple complete
// ideal, and its inversion.  The set is a union of blocks
//
//   H_ν = { (s+1)/a_ν + (t+1)/b_ν + m/cap_ν },  ν = 0..g*,
//
// generated by the pairs (a_ν, b_ν) = (a_{γ_ν}, I·I^{<=γ_{ν+1}} / a_{γ_ν}).
// Blocks below the last one are capped by (s+1)/a_ν + (t+1)/b_ν < 1/cap_ν
// with cap_ν = a_{γ_{ν+1}}; the last block has no m part.  The generator
// pairs, hence the whole set, can be recovered from the jumping numbers.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jumpnum/multiplier.hpp"
#include "jumpnum/puiseux.hpp"

namespace jumpnum {

struct JumpingSetDescription {
  std::vector<std::pair<Int, Int>> pairs;  // (a_{γ_ν}, b_ν), ν = 0..g*
  IntVec caps;                             // a_{γ_{ν+1}} for ν = 0..g*-1
  int blocks() const { return (int)pairs.size(); }
};

struct JumpDecomposition {
  int block = 0;  // ν
  Int s, t, m;    // value = (s+1)/a + (t+1)/b + m/cap; m unused in the last block
  bool has_m = false;
  bool operator==(const JumpDecomposition&) const = default;
};

struct Jump {
  Rat value;
  std::vector<JumpDecomposition> decompositions;
};

inline JumpingSetDescription generators(const SimpleIdeal& a) {
  const GammaStructure& gs = a.structure();
  JumpingSetDescription d;
  for (int nu = 0; nu <= gs.g_star; ++nu) {
    int eta = gs.gamma_at(nu);
    int gam = gs.gamma_at(nu + 1);
    Int num = dot_prefix(a.prox(), a.n(), a.n(), gam);  // I·I^{<=γ_{ν+1}}
    const Int& ae = a.basis().at(eta);
    if (num % ae != 0) fail(errc::internal_error, "b_nu not integral");
    d.pairs.emplace_back(ae, num / ae);
    if (nu < gs.g_star) d.caps.push_back(a.basis().at(gam));
  }
  return d;
}

inline JumpingSetDescription generators(const PointBasis& b) { return generators(SimpleIdeal(b)); }

inline Rat xi_prime(const JumpingSetDescription& d, int nu) {
  if (nu < 0 || nu >= d.blocks()) fail(errc::index_out_of_range, "block " + std::to_string(nu));
  return Rat(1, d.pairs[nu].first) + Rat(1, d.pairs[nu].second);
}

inline Rat lct(const JumpingSetDescription& d) { return xi_prime(d, 0); }

namespace detail {

// Visit every (s, t[, m]) of block ν with value <= bound; f(value, s, t, m).
template <class F>
void walk_block(const JumpingSetDescription& d, int nu, const Rat& bound, F&& f) {
  const Int& a = d.pairs[nu].first;
  const Int& b = d.pairs[nu].second;
  bool last = (nu == d.blocks() - 1);
  for (Int s = 0;; ++s) {
    Rat least = Rat(s + 1, a) + Rat(1, b);  // value at t = 0, m = 0
    if (least > bound) break;
    if (!last && least >= Rat(1, d.caps[nu])) break;
    for (Int t = 0;; ++t) {
      Rat c0 = Rat(s + 1, a) + Rat(t + 1, b);
      if (c0 > bound) break;
      if (last) {
        f(c0, s, t, Int(0));
      } else {
        if (c0 >= Rat(1, d.caps[nu])) break;  // strict block cap
        Int mmax = rat_floor((bound - c0) * d.caps[nu]);
        for (Int m = 0; m <= mmax; ++m) f(c0 + Rat(m, d.caps[nu]), s, t, m);
      }
    }
  }
}

}  // namespace detail

// All jumping numbers <= bound (inclusive), each with every decomposition
// realizing it across the blocks.
inline std::vector<Jump> enumerate_jumps(const JumpingSetDescription& d, const Rat& bound) {
  if (bound <= 0) fail(errc::nonpositive_bound, "bound " + to_string(bound));
  std::map<Rat, std::vector<JumpDecomposition>> acc;
  for (int nu = 0; nu < d.blocks(); ++nu) {
    bool last = (nu == d.blocks() - 1);
    detail::walk_block(d, nu, bound, [&](const Rat& v, const Int& s, const Int& t, const Int& m) {
      acc[v].push_back(JumpDecomposition{nu, s, t, m, !last});
    });
  }
  std::vector<Jump> out;
  out.reserve(acc.size());
  for (auto& [v, dec] : acc) out.push_back(Jump{v, std::move(dec)});
  return out;
}

inline std::vector<Rat> jump_values(const std::vector<Jump>& js) {
  std::vector<Rat> out;
  out.reserve(js.size());
  for (const Jump& j : js) out.push_back(j.value);
  return out;
}

// Bounded Diophantine membership test; returns a witness decomposition.
inline std::optional<JumpDecomposition> is_jumping_number(const JumpingSetDescription& d,
                                                          const Rat& c) {
  if (c <= 0) return std::nullopt;
  for (int nu = 0; nu < d.blocks(); ++nu) {
    const Int& a = d.pairs[nu].first;
    const Int& b = d.pairs[nu].second;
    bool last = (nu == d.blocks() - 1);
    for (Int s = 0; Rat(s + 1, a) + Rat(1, b) <= c; ++s) {
      for (Int t = 0;; ++t) {
        Rat c0 = Rat(s + 1, a) + Rat(t + 1, b);
        if (c0 > c) break;
        if (last) {
          if (c0 == c) return JumpDecomposition{nu, s, t, 0, false};
        } else {
          if (c0 >= Rat(1, d.caps[nu])) break;
          Rat m = (c - c0) * d.caps[nu];
          if (is_integral(m)) return JumpDecomposition{nu, s, t, rat_num(m), true};
        }
      }
    }
  }
  return std::nullopt;
}

// Smallest element of the set strictly above one.  Block values are pushed
// past one by the minimal m; not monotone in (s, t), so scan the whole cap
// window.
inline Rat min_jump_above_one(const JumpingSetDescription& d) {
  std::optional<Rat> best;
  for (int nu = 0; nu < d.blocks(); ++nu) {
    bool last = (nu == d.blocks() - 1);
    if (last) {
      // per residue s the minimal admissible t is forced; s beyond a never wins
      const Int& a = d.pairs[nu].first;
      const Int& b = d.pairs[nu].second;
      for (Int s = 0; s <= a; ++s) {
        Int u = rat_floor(b * (1 - Rat(s + 1, a))) + 1;  // least t+1 pushing past one
        if (u < 1) u = 1;
        Rat v = Rat(s + 1, a) + Rat(u, b);
        if (!best || v < *best) best = v;
      }
    } else {
      const Int& cap = d.caps[nu];
      detail::walk_block(d, nu, 1, [&](const Rat& c0, const Int&, const Int&, const Int& m) {
        if (m != 0) return;  // one candidate per (s,t)
        Int push = rat_floor((1 - c0) * cap) + 1;
        Rat v = c0 + Rat(push, cap);  // > 1 strictly
        if (!best || v < *best) best = v;
      });
    }
  }
  if (!best) fail(errc::internal_error, "no jumping number above one");
  return *best;
}

// e(a) = I·I, cross-checked against the smallest jumping number above one.
inline Int hilbert_samuel(const SimpleIdeal& a) {
  Int e = a.self_intersection();
  if (min_jump_above_one(generators(a)) != 1 + Rat(1, e))
    fail(errc::internal_error, "multiplicity does not match the jump above one");
  return e;
}

inline Int hilbert_samuel(const PointBasis& b) { return hilbert_samuel(SimpleIdeal(b)); }

// Zariski exponents (a_1, b_0, ..., b_g) = (I·X_{τ_0}, ..., I·X_{τ_{g+1}}),
// with the defining recursion verified internally.
inline IntVec zariski_exponents(const SimpleIdeal& a) {
  const GammaStructure& gs = a.structure();
  IntVec out;
  for (int nu = 0; nu <= gs.g + 1; ++nu) out.push_back(dot(a.prox(), gs.tau_at(nu), a.n()));
  // β̄_ν = (β'_ν - 1) e_{ν-1} + β̄_{ν-1} n_{ν-1}, n_0 = 1
  std::vector<Rat> beta = puiseux_exponents(a.basis());
  for (int nu = 1; nu <= gs.g + 1; ++nu) {
    Int e_prev = a.basis().at(gs.gamma_at(nu - 1));
    Int n_prev = nu == 1 ? Int(1) : a.prox().entry(gs.gamma_at(nu - 1), gs.gamma_at(nu - 2));
    Rat rec = (beta[nu - 1] - 1) * e_prev + Rat(out[nu - 1]) * n_prev;
    if (rec != out[nu]) fail(errc::internal_error, "Zariski exponent recursion broken");
  }
  return out;
}

inline IntVec zariski_exponents(const PointBasis& b) { return zariski_exponents(SimpleIdeal(b)); }

// Order of the ideal from its three smallest jumping numbers.
inline Int order_from_three_smallest(const Rat& xi, const Rat& psi, const Rat& zeta) {
  if (!(0 < xi && xi < psi && psi < zeta))
    fail(errc::not_integer, "inputs must be three increasing positive rationals");
  bool first_branch = (6 * xi == 10 * psi - 5 * zeta);
  if (!first_branch && 2 * xi == psi)
    fail(errc::not_integer, "2xi - psi vanishes; not a jump-set prefix");
  Rat ord = first_branch ? Rat(5) / (3 * xi) : Rat(1) / (2 * xi - psi);
  if (ord <= 0 || !is_integral(ord))
    fail(errc::not_integer, "candidate order " + to_string(ord) + " is not a positive integer");
  Int o = rat_num(ord);
  if ((xi > 1) != (o == 1)) fail(errc::not_integer, "order-one shortcut disagrees");
  if (xi < 1 && zeta > 1 && o != 2) fail(errc::not_integer, "order-two shortcut disagrees");
  return o;
}

namespace detail {

// Chain of generator pairs recovered from a jump set: a_{γ_k} = gcd of the
// previous pair, b_k from the least jump >= 1/a_{γ_k}.  Needs the set to be
// complete below one.  Returns (a_{γ_0}, b_0)..(a_{γ_{g-1}}, b_{g-1}).
inline Rat checked_inverse(const Rat& x, const char* what) {
  if (x <= 0) fail(errc::malformed_jump_set, std::string(what) + " is not positive");
  return Rat(1) / x;
}

inline std::vector<std::pair<Int, Int>> pair_chain(const std::vector<Rat>& jumps, const Int& a0) {
  std::vector<std::pair<Int, Int>> pairs;
  Rat b0 = checked_inverse(jumps.front() - Rat(1, a0), "xi'_0 - 1/a_0");
  if (!is_integral(b0)) fail(errc::malformed_jump_set, "b_0 is not an integer");
  pairs.emplace_back(a0, rat_num(b0));
  for (;;) {
    Int ak = boost::multiprecision::gcd(pairs.back().first, pairs.back().second);
    if (ak == 1) break;
    if (ak >= pairs.back().first)
      fail(errc::malformed_jump_set, "multiplicity chain does not descend");
    auto it = std::lower_bound(jumps.begin(), jumps.end(), Rat(1, ak));
    if (it == jumps.end()) fail(errc::malformed_jump_set, "missing jump above 1/a_k");
    Rat bk = checked_inverse(*it - Rat(1, ak), "xi'_k - 1/a_k");
    if (!is_integral(bk)) fail(errc::malformed_jump_set, "b_k is not an integer");
    pairs.emplace_back(ak, rat_num(bk));
  }
  return pairs;
}

// Multiplicities (a_1..a_{γ_g}) from the pair chain, through the exponents
// β'_1 = b_0/a_0 and β'_{ν+1} = 1 + ρ_ν/a_ν, where
// a_ν b_ν - a_{ν-1} b_{ν-1} = a_ν ρ_ν.
inline PointBasis prefix_from_pairs(const std::vector<std::pair<Int, Int>>& pairs) {
  std::vector<Rat> beta;
  beta.emplace_back(pairs[0].second, pairs[0].first);
  for (int nu = 1; nu < (int)pairs.size(); ++nu) {
    Int num = pairs[nu].first * pairs[nu].second - pairs[nu - 1].first * pairs[nu - 1].second;
    Rat r(num, pairs[nu].first);
    if (!is_integral(r) || r <= 0) fail(errc::malformed_jump_set, "rho_k is not a positive integer");
    beta.push_back(1 + r / pairs[nu].first);
  }
  try {
    return point_basis_from_puiseux(beta);
  } catch (const error& e) {
    fail(errc::malformed_jump_set, std::string("exponent reconstruction failed: ") + e.what());
  }
}

}  // namespace detail

// Reconstructs the point basis from the full set of jumping numbers in
// (0, 2].  Every step is exact; any failure means the input is not the jump
// set of a simple complete ideal.
inline PointBasis invert_jumping_numbers(std::vector<Rat> jumps) {
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  if (jumps.empty()) fail(errc::malformed_jump_set, "empty jump list");
  for (const Rat& c : jumps) {
    if (c <= 0 || c > 2) fail(errc::malformed_jump_set, "jump " + to_string(c) + " outside (0,2]");
    if (c == 1) fail(errc::malformed_jump_set, "1 is never a jumping number");
  }
  if (jumps.back() != 2) fail(errc::malformed_jump_set, "2 must be a jumping number");

  std::vector<Rat> below1;
  for (const Rat& c : jumps)
    if (c < 1) below1.push_back(c);
  Rat xi_p = *std::upper_bound(jumps.begin(), jumps.end(), Rat(1));  // least jump > 1 = 1 + 1/I²

  IntVec basis;
  if (below1.empty()) {
    // no satellites: all multiplicities one, n = 1/(ξ'-1)
    Rat nn = Rat(1) / (xi_p - 1);
    if (!is_integral(nn) || nn <= 0) fail(errc::malformed_jump_set, "1/(xi'-1) not an integer");
    basis.assign(rat_num(nn).convert_to<std::size_t>(), Int(1));
  } else {
    IntVec prefix;
    if (below1.size() == 1) {
      prefix = {2, 1, 1};
    } else if (below1.size() == 2) {
      prefix = {2, 2, 1, 1};
    } else {
      Int a0;
      try {
        a0 = order_from_three_smallest(jumps[0], jumps[1], jumps[2]);
      } catch (const error& e) {
        fail(errc::malformed_jump_set, std::string("order step failed: ") + e.what());
      }
      prefix = detail::prefix_from_pairs(detail::pair_chain(jumps, a0)).values();
    }
    // tail of free points: n - γ_g = 1/(ξ'-1) + 1/(ξ''-1)
    Rat xi_pp = below1.back();  // greatest jump below one
    Rat tail = Rat(1) / (xi_p - 1) + Rat(1) / (xi_pp - 1);
    if (!is_integral(tail) || tail < 0)
      fail(errc::malformed_jump_set, "tail length " + to_string(tail) + " not a nonnegative integer");
    basis = prefix;
    basis.insert(basis.end(), rat_num(tail).convert_to<std::size_t>(), Int(1));
  }

  PointBasis b = [&] {
    try {
      return validate_point_basis(basis);
    } catch (const error& e) {
      fail(errc::malformed_jump_set, std::string("reconstructed basis invalid: ") + e.what());
    }
  }();
  // the reconstruction must reproduce the input set exactly
  if (jump_values(enumerate_jumps(generators(b), 2)) != jumps)
    fail(errc::malformed_jump_set, "list is not the jump set of any simple complete ideal");
  return b;
}

// Generator pairs recovered from the ξ'_ν sequence alone: a_γ·ξ'_ν in lowest
// terms is (u+v)/(uv) with {u, v} = {a_η, b_ν}/a_γ the roots of
// ω² - (u+v)ω + uv.
inline std::vector<std::pair<Int, Int>> pairs_from_xi_sequence(const std::vector<Rat>& xi) {
  using boost::multiprecision::sqrt;
  std::vector<std::pair<Int, Int>> pairs(xi.size());
  Int ag = 1;
  for (int nu = (int)xi.size() - 1; nu >= 0; --nu) {
    Rat w = xi[nu] * ag;
    Int puv = rat_num(w), quv = rat_den(w);  // u+v, uv
    Int disc = puv * puv - 4 * quv;
    if (disc < 0) fail(errc::malformed_jump_set, "negative discriminant");
    Int root = sqrt(disc);
    if (root * root != disc || (puv - root) % 2 != 0)
      fail(errc::malformed_jump_set, "pair quadratic has no integer roots");
    Int u = (puv - root) / 2, v = (puv + root) / 2;
    if (u < 1) fail(errc::malformed_jump_set, "pair root is not a positive integer");
    pairs[nu] = {u * ag, v * ag};
    ag = pairs[nu].first;
  }
  return pairs;
}

}  // namespace jumpnum
