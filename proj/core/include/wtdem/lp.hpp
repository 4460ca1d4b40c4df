#pragma once

#include <cstdint>
#include <vector>

#include "wtdem/titscone.hpp"
#include "wtdem/weyl.hpp"

// Length-positive sets LP(x) = { v in W | length_functional(x, v(r)) >= 0
// for every positive root r }.
//
// For level(x) > 0 the set is finite (at most two elements, three when the
// level is one) and is produced by a case split on j = k - t*l where t is
// the unique integer with -l/2 < j <= l/2.  For boundary elements the set
// is a full half of the group, or all of it when the Weyl part is trivial,
// and is kept symbolic.

namespace wtdem {

struct LPSet {
  enum class Kind { Finite, HalfSide, All };

  Kind kind = Kind::All;
  std::vector<WeylElt> elems;  // Finite only; sorted by (length, side)
  Side half = Side::Left;      // HalfSide only: { v | s_i v > v }

  friend bool operator==(const LPSet&, const LPSet&) = default;
};

LPSet lp_set(const WTElement& x);

// Exact membership, without materialising infinite sets.
bool lp_set_contains(const LPSet& s, const WeylElt& v);
bool lp_contains(const WTElement& x, const WeylElt& v);

// Brute force over positive roots with |n| <= n_bound; pass 0 to use the
// derived sufficient bound 2|k| + 2|t_v| + l + 2.
bool lp_oracle(const WTElement& x, const WeylElt& v, std::int64_t n_bound = 0);

}  // namespace wtdem
