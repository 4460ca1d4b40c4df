#pragma once

#include <cstdint>
#include <vector>

#include "wtdem/roots.hpp"
#include "wtdem/weyl.hpp"

// Elements of the semigroup W_T = W x T, written w * eps^mu with mu in the
// Tits cone: level(mu) > 0, or mu a multiple of the null coweight.  The
// multiplication convention is eps^mu * w = w * eps^{w^{-1} mu}, so
//
//   (w_x eps^{mu_x}) (w_y eps^{mu_y}) = w_x w_y eps^{w_y^{-1} mu_x + mu_y}.
//
// Lengths are the integer-valued collapse of the Muthiah-Orr length: the
// 2rho pairing is normalised by <2rho, L> = 0, under which ordinary affine
// Weyl elements keep their Coxeter length but general elements may have
// negative length.  Length differences, and every identity checked here,
// are independent of that normalisation.

namespace wtdem {

struct WTElement {
  WeylElt w;
  Coweight mu;

  friend bool operator==(const WTElement&, const WTElement&) = default;
};

inline bool in_tits_cone(const Coweight& mu) {
  return mu.l > 0 || (mu.l == 0 && mu.k == 0);
}

inline bool is_valid(const WTElement& x) { return in_tits_cone(x.mu); }

inline WTElement wt_identity() { return {weyl_e(), Coweight{}}; }

inline std::int64_t level(const WTElement& x) { return x.mu.l; }

// Throws OutsideTitsCone if the result leaves the cone (impossible for
// valid inputs; kept as an assertion on the convention).
WTElement wt_mul(const WTElement& x, const WTElement& y);

// <mu, r> + [r positive] - [w(r) positive]
inline std::int64_t length_functional(const WTElement& x, const AffineRoot& r) {
  return pair(x.mu, r) + (is_positive(r) ? 1 : 0) -
         (is_positive(act_root(x.w, r)) ? 1 : 0);
}

// Length via a length-positive witness u:
//   len(x) = <u^{-1} mu_x, 2rho> - len(u) + len(w_x u),
// independent of the choice of u.
std::int64_t wt_length(const WTElement& x);

// Independent route: translation length by height plus a signed count of
// inversions of the Weyl part.  Used as an oracle for wt_length.
std::int64_t wt_length_via_inversions(const WTElement& x);

// len(eps^mu) alone, via a length-positive witness for the translation.
std::int64_t translation_length(const Coweight& mu);

// { positive double affine roots b | x(b) < 0 and y^{-1}(b) < 0 }, finite.
// y^{-1} acts formally (it need not lie in W_T).  Enumeration scans a safe
// window of base roots with exact per-root intervals for the pi-exponent;
// throws BoundOverflow if the window would exceed `candidate_cap`.
std::vector<DoubleAffineRoot> daf_inversions_intersection(
    const WTElement& x, const WTElement& y, std::int64_t candidate_cap = 10000);

// W_T action on double affine roots: w eps^mu (b + m pi) = w(b) + (m - <mu,b>) pi.
inline DoubleAffineRoot daf_act(const WeylElt& w, const Coweight& mu,
                                const DoubleAffineRoot& r) {
  return {act_root(w, r.base), r.m_pi - pair(mu, r.base)};
}

}  // namespace wtdem
