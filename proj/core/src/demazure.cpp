#include "wtdem/demazure.hpp"

#include <algorithm>
#include <string>

#include "wtdem/error.hpp"

namespace wtdem {

namespace {

struct Candidate {
  WeylElt u, v;
  std::int64_t d;
};

void sort_pairs(std::vector<std::pair<WeylElt, WeylElt>>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return weyl_less(a.first, b.first);
    return weyl_less(a.second, b.second);
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

// Members of a symbolic LP set up to the given length: the identity plus
// one column, or both columns for All.
std::vector<WeylElt> half_members(const LPSet& s, std::int64_t max_len) {
  std::vector<WeylElt> out{weyl_e()};
  for (std::int64_t len = 1; len <= max_len; ++len) {
    if (s.kind == LPSet::Kind::All || s.half == Side::Left)
      out.push_back(element_on_side(Side::Left, len));
    if (s.kind == LPSet::Kind::All || s.half == Side::Right)
      out.push_back(element_on_side(Side::Right, len));
  }
  return out;
}

std::int64_t max_elem_length(const LPSet& s) {
  std::int64_t m = 0;
  for (const auto& w : s.elems) m = std::max(m, length(w));
  return m;
}

// Minimum of d(u => z) over the chain { z : w_y is a prefix of z }, with the
// unique minimising z.  Exactly one z attains the minimum for each u.
Candidate best_target_in_chain(const WeylElt& u, const WeylElt& wy) {
  std::int64_t l0 = length(wy), lu = length(u);
  if (is_prefix(wy, u)) return {u, u, 0};
  if (lu >= l0 - 1) {
    WeylElt z = element_on_side(side(wy), lu + 1);
    return {u, z, 1};
  }
  return {u, wy, l0 - lu};
}

}  // namespace

MinPairs min_pairs(const WTElement& x, const WTElement& y) {
  const LPSet sx = lp_set(x);
  const LPSet sy = lp_set(y);
  const bool fx = sx.kind == LPSet::Kind::Finite;
  const bool fy = sy.kind == LPSet::Kind::Finite;
  const WeylElt wy = y.w;
  const WeylElt wy_inv = inv(wy);

  MinPairs result;

  if (fx && fy) {
    std::int64_t best = -1;
    for (const WeylElt& u : sx.elems) {
      for (const WeylElt& v : sy.elems) {
        std::int64_t d = distance(u, mul(wy, v));
        if (best < 0 || d < best) {
          best = d;
          result.pairs.clear();
        }
        if (d == best) result.pairs.emplace_back(u, v);
      }
    }
    result.dist = best;
  } else if (fx && !fy) {
    // Boundary y: the targets w_y LP(y) form the chain above w_y (all of W
    // when w_y = e).  Each u has a unique best target.
    std::vector<Candidate> cands;
    for (const WeylElt& u : sx.elems) {
      if (wy == weyl_e())
        cands.push_back({u, u, 0});
      else
        cands.push_back(best_target_in_chain(u, wy));
    }
    std::int64_t best = -1;
    for (const auto& c : cands)
      if (best < 0 || c.d < best) best = c.d;
    for (const auto& c : cands)
      if (c.d == best) result.pairs.emplace_back(c.u, mul(wy_inv, c.v));
    result.dist = best;
  } else if (!fx && fy) {
    // Boundary x: LP(x) contains a member of every length, so each target
    // z = w_y v is hit at distance 0 (z in LP(x)) or 1 (from one below).
    std::vector<Candidate> cands;
    for (const WeylElt& v : sy.elems) {
      WeylElt z = mul(wy, v);
      if (lp_set_contains(sx, z)) {
        cands.push_back({z, v, 0});
      } else {
        WeylElt u = element_on_side(sx.half, length(z) - 1);
        cands.push_back({u, v, 1});
      }
    }
    std::int64_t best = -1;
    for (const auto& c : cands)
      if (best < 0 || c.d < best) best = c.d;
    for (const auto& c : cands)
      if (c.d == best) result.pairs.emplace_back(c.u, c.v);
    result.dist = best;
  } else {
    // Both factors on the boundary: infinite minimising families, reported
    // up to a length window.
    const std::int64_t cap = length(x.w) + length(y.w) + 4;
    result.truncated = true;
    if (wy == weyl_e()) {
      result.dist = 0;
      for (const WeylElt& u : half_members(sx, cap)) result.pairs.emplace_back(u, u);
    } else {
      const Side chain_side = side(wy);
      const bool overlap = sx.kind == LPSet::Kind::All || sx.half == chain_side;
      result.dist = overlap ? 0 : 1;
      for (std::int64_t len = length(wy); len <= cap; ++len) {
        WeylElt z = element_on_side(chain_side, len);
        WeylElt v = mul(wy_inv, z);
        if (overlap)
          result.pairs.emplace_back(z, v);
        else
          result.pairs.emplace_back(element_on_side(sx.half, len - 1), v);
      }
    }
  }

  sort_pairs(result.pairs);
  return result;
}

DemazureResult dem_product(const WTElement& x, const WTElement& y) {
  MinPairs mp = min_pairs(x, y);

  DemazureResult res;
  res.defect = mp.dist;
  bool first = true;
  for (const auto& [u, v] : mp.pairs) {
    WeylElt uv_inverse = mul(u, inv(v));
    Coweight v_weight = act_coweight(v, weight(u, mul(y.w, v)));
    WTElement prod{mul(x.w, uv_inverse),
                   act_coweight(mul(v, inv(u)), x.mu) + y.mu - v_weight};
    if (first) {
      res.uv_inverse = uv_inverse;
      res.v_weight = v_weight;
      res.product = prod;
      first = false;
    } else if (!(uv_inverse == res.uv_inverse) || !(v_weight == res.v_weight) ||
               !(prod == res.product)) {
      throw WellDefinednessViolation(
          "dem_product: minimising pairs disagree on (" + to_string(x.w) + ", " +
          to_string(y.w) + ") input");
    }
  }
  if (!in_tits_cone(res.product.mu))
    throw OutsideTitsCone("dem_product: product coweight left the Tits cone");
  res.pairs = std::move(mp);
  return res;
}

bool lp_of_product_check(const WTElement& x, const WTElement& y) {
  DemazureResult res = dem_product(x, y);
  LPSet lp_prod = lp_set(res.product);
  if (lp_prod.kind != LPSet::Kind::Finite) return false;
  std::vector<WeylElt> vs;
  for (const auto& [u, v] : res.pairs.pairs) vs.push_back(v);
  std::sort(vs.begin(), vs.end(), weyl_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs == lp_prod.elems;
}

bool is_length_additive(const WTElement& x, const WTElement& y) {
  const LPSet sx = lp_set(x);
  const LPSet sy = lp_set(y);
  if (sy.kind == LPSet::Kind::Finite) {
    for (const WeylElt& v : sy.elems)
      if (lp_set_contains(sx, mul(y.w, v))) return true;
    return false;
  }
  if (sx.kind == LPSet::Kind::Finite) {
    for (const WeylElt& u : sx.elems)
      if (lp_set_contains(sy, mul(inv(y.w), u))) return true;
    return false;
  }
  // Both symbolic: w_y LP(y) is the chain above w_y, LP(x) a half (or all).
  if (y.w == weyl_e() || sx.kind == LPSet::Kind::All) return true;
  return side(y.w) == sx.half;
}

bool additivity_equiv_check(const WTElement& x, const WTElement& y) {
  const bool additive = is_length_additive(x, y);
  DemazureResult res = dem_product(x, y);
  const std::int64_t total = wt_length(x) + wt_length(y);
  bool ok = additive == (res.defect == 0);
  ok = ok && additive == (wt_length(wt_mul(x, y)) == total);
  ok = ok && additive == (wt_length(res.product) == total);
  if (additive) ok = ok && res.product == wt_mul(x, y);
  return ok;
}

bool assoc_check(const WTElement& x, const WTElement& y, const WTElement& z) {
  WTElement left = dem_product(dem_product(x, y).product, z).product;
  WTElement right = dem_product(x, dem_product(y, z).product).product;
  return left == right;
}

}  // namespace wtdem
