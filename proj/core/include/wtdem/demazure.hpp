#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wtdem/lp.hpp"
#include "wtdem/qbg.hpp"
#include "wtdem/titscone.hpp"

// The generalised Demazure product on W_T, computed from a distance
// minimising pair: for (u, v) in LP(x) x LP(y) minimising d(u => w_y v),
//
//   x * y = w_x u v^{-1} eps^{ v u^{-1} mu_x + mu_y - v wt(u => w_y v) }.
//
// The value is independent of the chosen pair and path; the computation
// verifies this across every reported pair and raises
// WellDefinednessViolation if two pairs ever disagree.

namespace wtdem {

struct MinPairs {
  std::vector<std::pair<WeylElt, WeylElt>> pairs;  // sorted by (len u, len v)
  std::int64_t dist = 0;
  // Infinite minimising families (boundary factors) are cut at a length
  // window; `dist` is exact regardless.
  bool truncated = false;
};

struct DemazureResult {
  WTElement product;
  MinPairs pairs;
  WeylElt uv_inverse;   // u v^{-1}, pair-independent
  Coweight v_weight;    // v wt(u => w_y v), pair-independent
  std::int64_t defect = 0;  // d(u => w_y v)
};

MinPairs min_pairs(const WTElement& x, const WTElement& y);

DemazureResult dem_product(const WTElement& x, const WTElement& y);

// LP(x*y) equals the set of v-components of the minimising pairs
// (requires level(x), level(y) >= 1).
bool lp_of_product_check(const WTElement& x, const WTElement& y);

// len(x*y) = len(x) + len(y)  iff  LP(y) and w_y^{-1} LP(x) intersect.
bool is_length_additive(const WTElement& x, const WTElement& y);

// The additivity biconditional between * and the semigroup product, plus
// x*y == xy whenever either side is additive.
bool additivity_equiv_check(const WTElement& x, const WTElement& y);

// (x*y)*z == x*(y*z); guaranteed for levels > 1.
bool assoc_check(const WTElement& x, const WTElement& y, const WTElement& z);

}  // namespace wtdem
