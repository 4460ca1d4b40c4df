#include "wtdem/titscone.hpp"

#include <algorithm>
#include <cstdlib>

#include "wtdem/error.hpp"
#include "wtdem/lp.hpp"

namespace wtdem {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t pos_ind(const AffineRoot& r) { return is_positive(r) ? 1 : 0; }

// ht(k*a^ + m*d + l*L) = k + 2m: the null coweight is the sum of the two
// simple affine coroots.
std::int64_t coweight_height(const Coweight& mu) { return mu.k + 2 * mu.m; }

// Some length-positive witness for x; for boundary elements the identity
// always qualifies.
WeylElt lp_witness(const WTElement& x) {
  LPSet s = lp_set(x);
  if (s.kind == LPSet::Kind::Finite) return s.elems.front();
  return weyl_e();
}

}  // namespace

WTElement wt_mul(const WTElement& x, const WTElement& y) {
  WTElement z{mul(x.w, y.w), act_coweight(inv(y.w), x.mu) + y.mu};
  if (!in_tits_cone(z.mu))
    throw OutsideTitsCone("wt_mul: product coweight left the Tits cone");
  return z;
}

std::int64_t translation_length(const Coweight& mu) {
  WeylElt u = lp_witness({weyl_e(), mu});
  std::int64_t len = 2 * coweight_height(act_coweight(inv(u), mu));
  if (mu.l == 0) return len;  // pairings vanish on the boundary

  std::int64_t bound = 2 * abs64(mu.k) + 2 * abs64(u.t) + mu.l + 2;
  std::int64_t hits_on_shell = 0;
  for (std::int64_t n = 0; n <= bound; ++n) {
    for (std::int64_t eps : {+1, -1}) {
      AffineRoot r{eps, n};
      if (!is_positive(r)) continue;
      if (pair(mu, act_root(u, r)) == -1) {
        len += 2;
        if (n >= bound - 1) ++hits_on_shell;
      }
    }
  }
  if (hits_on_shell != 0)
    throw TruncationTooSmall("translation_length: enumeration window too small");
  return len;
}

std::int64_t wt_length(const WTElement& x) {
  WeylElt u = lp_witness(x);
  return two_rho_pair(act_coweight(inv(u), x.mu)) - length(u) + length(mul(x.w, u));
}

std::int64_t wt_length_via_inversions(const WTElement& x) {
  std::int64_t len = translation_length(x.mu);
  for (const AffineRoot& r : inversion_set(x.w))
    len += pair(x.mu, r) >= 0 ? 1 : -1;
  return len;
}

std::vector<DoubleAffineRoot> daf_inversions_intersection(const WTElement& x,
                                                          const WTElement& y,
                                                          std::int64_t candidate_cap) {
  const WeylElt wy_inv = inv(y.w);
  const std::int64_t bound = 2 * abs64(x.mu.k) + 2 * abs64(y.mu.k) +
                             2 * abs64(y.w.t) + length(x.w) + length(y.w) + 4;
  if (2 * bound + 1 > candidate_cap)
    throw BoundOverflow("daf_inversions_intersection: window exceeds candidate cap");

  std::vector<DoubleAffineRoot> out;
  std::int64_t hits_on_shell = 0;
  for (std::int64_t n = 0; n <= bound; ++n) {
    for (std::int64_t eps : {+1, -1}) {
      AffineRoot base{eps, n};
      if (!is_positive(base)) continue;
      // x(b + m pi) < 0  iff  |m| <= s<mu_x, b> - [s w_x(b) positive],
      // y^{-1}(b + m pi) < 0 iff |m| <= -s<mu_y, w_y^{-1} b> - [s w_y^{-1}(b) positive],
      // where s = sgn(m) and both inequalities use |m| with its sign folded in.
      const std::int64_t px = pair(x.mu, base);
      const AffineRoot x_img = act_root(x.w, base);
      const AffineRoot y_img = act_root(wy_inv, base);
      const std::int64_t py = pair(y.mu, y_img);

      const std::int64_t up = std::min(px - pos_ind(x_img), -py - pos_ind(y_img));
      for (std::int64_t m = 0; m <= up; ++m) {
        out.push_back({base, m});
        if (n >= bound - 1) ++hits_on_shell;
      }
      const std::int64_t down =
          std::min(-px - pos_ind(negate(x_img)), py - pos_ind(negate(y_img)));
      for (std::int64_t m = 1; m <= down; ++m) {
        out.push_back({negate(base), m});
        if (n >= bound - 1) ++hits_on_shell;
      }
      if (static_cast<std::int64_t>(out.size()) > candidate_cap)
        throw BoundOverflow("daf_inversions_intersection: result exceeds candidate cap");
    }
  }
  if (hits_on_shell != 0)
    throw TruncationTooSmall("daf_inversions_intersection: window too small");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wtdem
