#pragma once

// Deterministic corpus of valid point bases for differential testing.  A
// proximity tower is sampled by walking the blow-up chain: each new point is
// proximate to its predecessor and, optionally, to one of the points the
// predecessor is proximate to.  The basis is then the bottom row of the
// inverse proximity matrix.  splitmix64 keeps the stream platform-stable.

#include <cstdint>
#include <vector>

#include "jumpnum/point_basis.hpp"

namespace jumpnum {

class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform-ish draw in [0, k); k small so modulo bias is irrelevant here
  std::uint64_t below(std::uint64_t k) { return next() % k; }

 private:
  std::uint64_t state_;
};

inline PointBasis random_point_basis(Splitmix64& rng, int n_max, const Int& a_max) {
  for (;;) {
    int n = 1 + (int)rng.below((std::uint64_t)n_max);
    // prox_of[i] = points i is proximate to (1-based)
    std::vector<std::vector<int>> prox_of(n + 1);
    for (int i = 2; i <= n; ++i) {
      prox_of[i].push_back(i - 1);
      const auto& opts = prox_of[i - 1];
      if (!opts.empty() && rng.below(2) == 0)
        prox_of[i].push_back(opts[rng.below(opts.size())]);
    }
    std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    for (int i = 2; i <= n; ++i)
      for (int j : prox_of[i]) p[i - 1][j - 1] = -1;
    IntVec basis = detail::invert_unipotent(p).back();
    if (basis[0] <= a_max) return validate_point_basis(basis);
  }
}

// count sampled bases, preceded by a fixed set of named edge cases
inline std::vector<PointBasis> generate_corpus(int n_max, const Int& a_max, int count,
                                               std::uint64_t seed, bool with_fixed = true) {
  std::vector<PointBasis> out;
  if (with_fixed) {
    for (const IntVec& a : std::vector<IntVec>{{1},
                                               {1, 1},
                                               {2, 1, 1},
                                               {2, 2, 1, 1},
                                               {3, 1, 1, 1},
                                               {2, 1, 1, 1, 1},
                                               {4, 2, 2, 1, 1},
                                               {6, 3, 3, 3, 1, 1, 1, 1}})
      out.push_back(validate_point_basis(a));
  }
  Splitmix64 rng(seed);
  for (int i = 0; i < count; ++i) out.push_back(random_point_basis(rng, n_max, a_max));
  return out;
}

}  // namespace jumpnum
