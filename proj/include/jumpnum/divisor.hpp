#pragma once

// Exact arithmetic in the exceptional divisor lattice: coordinates in the
// three standard bases, the intersection pairing, antinef tests, antinef
// closures, and the canonical divisor.
//
// A divisor is stored by its coefficients in the E basis (strict
// transforms).  The other two coordinate vectors are
//   total basis   d* = d Pᵀ     (point-basis / total-transform coordinates)
//   ideal basis   d̂ = d PᵀP    (factorization exponents when antinef)

#include <vector>

#include "jumpnum/point_basis.hpp"

namespace jumpnum {

struct Divisor {
  const ProximityMatrix* ctx = nullptr;
  IntVec d;  // E-basis coefficients
};

inline Divisor make_divisor(const ProximityMatrix& P, IntVec d) {
  if ((int)d.size() != P.n) fail(errc::dimension_mismatch, "divisor length");
  return Divisor{&P, std::move(d)};
}

namespace detail {

inline void check_same_context(const Divisor& a, const Divisor& b) {
  if (!a.ctx || !b.ctx || !a.ctx->same_context(*b.ctx))
    fail(errc::context_mismatch, "divisors over different proximity matrices");
}

}  // namespace detail

inline IntVec total_coords(const Divisor& D) {  // d* = d Pᵀ
  const ProximityMatrix& P = *D.ctx;
  IntVec out(P.n, 0);
  for (int j = 0; j < P.n; ++j) {
    Int s = 0;
    for (int i = 0; i < P.n; ++i) s += D.d[i] * P.p[j][i];
    out[j] = s;
  }
  return out;
}

inline IntVec ideal_coords(const Divisor& D) {  // d̂ = d PᵀP
  const ProximityMatrix& P = *D.ctx;
  IntVec out(P.n, 0);
  for (int j = 0; j < P.n; ++j) {
    Int s = 0;
    for (int i = 0; i < P.n; ++i) s += D.d[i] * P.ptp[i][j];
    out[j] = s;
  }
  return out;
}

inline Divisor divisor_from_total(const ProximityMatrix& P, const IntVec& dstar) {
  if ((int)dstar.size() != P.n) fail(errc::dimension_mismatch, "divisor length");
  IntVec d(P.n, 0);
  for (int j = 1; j <= P.n; ++j) {
    Int s = 0;
    const IntVec& xj = P.row(j);
    for (int i = 0; i < P.n; ++i) s += dstar[i] * xj[i];
    d[j - 1] = s;
  }
  return Divisor{&P, std::move(d)};
}

inline Divisor divisor_from_ideal(const ProximityMatrix& P, const IntVec& dhat) {
  if ((int)dhat.size() != P.n) fail(errc::dimension_mismatch, "divisor length");
  IntVec t(P.n, 0);  // d̂ P^{-1}
  for (int j = 0; j < P.n; ++j) {
    Int s = 0;
    for (int i = j; i < P.n; ++i) s += dhat[i] * P.x[i][j];
    t[j] = s;
  }
  return divisor_from_total(P, t);
}

// D·F = -(d*·f*)
inline Int intersect(const Divisor& D, const Divisor& F) {
  detail::check_same_context(D, F);
  IntVec ds = total_coords(D), fs = total_coords(F);
  Int s = 0;
  for (int i = 0; i < (int)ds.size(); ++i) s += ds[i] * fs[i];
  return -s;
}

inline bool is_antinef(const Divisor& D) {
  for (const Int& v : ideal_coords(D))
    if (v < 0) return false;
  return true;
}

enum class LauferPolicy { smallest_index, largest_index };

namespace detail {

constexpr long long laufer_budget = 10000000;  // exceeding this is a bug

// Repair negative entries of d̂ in place.  A saturating step at ν adds
// ceil(-d̂_ν / w_ν)·E_ν, which never overshoots the closure: any antinef
// F >= D has f_ν >= d_ν + ceil((D·E_ν)/w_ν).  unit_steps = one E_ν at a
// time, matching the textbook iteration.
inline void closure_in_place(const ProximityMatrix& P, IntVec& d, IntVec& dhat,
                             LauferPolicy policy, bool unit_steps) {
  long long steps = 0;
  for (;;) {
    int pick = -1;
    if (policy == LauferPolicy::smallest_index) {
      for (int v = 0; v < P.n; ++v)
        if (dhat[v] < 0) {
          pick = v;
          break;
        }
    } else {
      for (int v = P.n - 1; v >= 0; --v)
        if (dhat[v] < 0) {
          pick = v;
          break;
        }
    }
    if (pick < 0) return;
    Int w = P.ptp[pick][pick];
    Int k = 1;
    if (!unit_steps) k = (-dhat[pick] + w - 1) / w;
    d[pick] += k;
    dhat[pick] += k * w;
    for (int nb : P.adj[pick]) dhat[nb] -= k;
    if (++steps > laufer_budget) fail(errc::internal_error, "antinef closure did not terminate");
  }
}

}  // namespace detail

inline Divisor antinef_closure(const Divisor& D, LauferPolicy policy = LauferPolicy::smallest_index,
                               bool unit_steps = false) {
  const ProximityMatrix& P = *D.ctx;
  IntVec d = D.d;
  IntVec dhat = ideal_coords(D);
  detail::closure_in_place(P, d, dhat, policy, unit_steps);
  for (const Int& v : d)
    if (v < 0) fail(errc::internal_error, "antinef closure not effective");
  return Divisor{&P, std::move(d)};
}

// K = E*_1 + ... + E*_n; in E coordinates the row sums of P^{-1}
inline Divisor canonical_divisor(const ProximityMatrix& P) {
  IntVec k(P.n, 0);
  for (int i = 1; i <= P.n; ++i) {
    Int s = 0;
    for (const Int& v : P.row(i)) s += v;
    k[i - 1] = s;
  }
  return Divisor{&P, std::move(k)};
}

// Antinef divisors correspond to complete ideals: valuation vector d,
// factorization vector d̂ (exponents of the simple ideals p_1..p_n).
struct CompleteIdealVector {
  IntVec valuation;
  IntVec factorization;
  bool operator==(const CompleteIdealVector&) const = default;
};

inline CompleteIdealVector ideal_of_divisor(const Divisor& D) {
  IntVec dhat = ideal_coords(D);
  for (const Int& v : dhat)
    if (v < 0) fail(errc::not_antinef, "divisor is not antinef");
  return CompleteIdealVector{D.d, std::move(dhat)};
}

}  // namespace jumpnum
