#include "wtdem/lp.hpp"

#include <algorithm>
#include <cstdlib>

namespace wtdem {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// floor((2k + l - 1) / (2l)): the unique t with -l/2 < k - t*l <= l/2.
std::int64_t residue_shift(std::int64_t k, std::int64_t l) {
  std::int64_t num = 2 * k + l - 1, den = 2 * l;
  std::int64_t q = num / den;
  if (num % den != 0 && (num < 0) != (den < 0)) --q;
  return q;
}

void push_unique(std::vector<WeylElt>& v, const WeylElt& w) {
  if (std::find(v.begin(), v.end(), w) == v.end()) v.push_back(w);
}

}  // namespace

LPSet lp_set(const WTElement& x) {
  const std::int64_t k = x.mu.k, l = x.mu.l;

  if (l == 0) {
    if (x.w == weyl_e()) return {LPSet::Kind::All, {}, Side::Left};
    // w = w' s_i reduced: LP(x) = { v | s_i v > v }
    return {LPSet::Kind::HalfSide, {}, last_letter(x.w) == 1 ? Side::Left : Side::Right};
  }

  const std::int64_t t = residue_shift(k, l);
  const std::int64_t j = k - t * l;
  const std::int64_t r = x.w.t;
  const std::int64_t pos_w0a = x.w.v0 ? 0 : 1;  // [w_0(a) positive]
  const WeylElt tau = weyl_tau(t);

  std::vector<WeylElt> found;
  // 1 <= sgn(v0)*j <= (l-1)/2 picks out tau^t v0 directly.
  if (j >= 1 && 2 * j <= l - 1) push_unique(found, tau);
  if (-j >= 1 && -2 * j <= l - 1) push_unique(found, mul(tau, weyl_s1()));
  if (j == 0) {
    if (t <= 0 || t >= pos_w0a - r) push_unique(found, tau);
    if (t >= 1 || t <= pos_w0a - r - 1) push_unique(found, mul(tau, weyl_s1()));
  }
  if (2 * j == l) {
    if (t >= 0 || t <= -1 - r) push_unique(found, tau);
    if (t <= -1 || t >= -r) push_unique(found, mul(tau, weyl_s0()));
  }
  if (2 * j == l - 1 && -r <= t && t <= -1) push_unique(found, mul(tau, weyl_s0()));
  if (2 * j == -(l - 1) && 1 <= t && t <= -r)
    push_unique(found, mul(tau, mul(weyl_s1(), weyl_s0())));

  std::sort(found.begin(), found.end(), weyl_less);
  return {LPSet::Kind::Finite, std::move(found), Side::Left};
}

bool lp_set_contains(const LPSet& s, const WeylElt& v) {
  switch (s.kind) {
    case LPSet::Kind::All:
      return true;
    case LPSet::Kind::HalfSide: {
      // { v | s_i v > v }: the identity and the whole opposite column.
      Side sv = side(v);
      return sv == Side::Both || sv == s.half;
    }
    case LPSet::Kind::Finite:
      return std::find(s.elems.begin(), s.elems.end(), v) != s.elems.end();
  }
  return false;
}

bool lp_contains(const WTElement& x, const WeylElt& v) {
  return lp_set_contains(lp_set(x), v);
}

bool lp_oracle(const WTElement& x, const WeylElt& v, std::int64_t n_bound) {
  if (n_bound <= 0) n_bound = 2 * abs64(x.mu.k) + 2 * abs64(v.t) + x.mu.l + 2;
  for (std::int64_t n = 0; n <= n_bound; ++n) {
    for (std::int64_t eps : {+1, -1}) {
      AffineRoot r{eps, n};
      if (!is_positive(r)) continue;
      if (length_functional(x, act_root(v, r)) < 0) return false;
    }
  }
  return true;
}

}  // namespace wtdem
