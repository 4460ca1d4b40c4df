#include "wtdem/suites.hpp"

#include <algorithm>
#include <random>

#include "wtdem/demazure.hpp"
#include "wtdem/lp.hpp"
#include "wtdem/qbg.hpp"
#include "wtdem/text.hpp"

namespace wtdem {

namespace {

struct Sampler {
  std::mt19937_64 gen;

  explicit Sampler(std::uint64_t seed) : gen(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }

  WeylElt weyl(std::int64_t t_max = 4) {
    return {uniform(0, 1) == 1, uniform(-t_max, t_max)};
  }

  Coweight coweight(const SuiteOptions& o, std::int64_t min_level) {
    Coweight mu{uniform(-o.max_k, o.max_k), uniform(-o.max_m, o.max_m),
                uniform(min_level, std::max(min_level, o.max_l))};
    if (mu.l == 0) mu.k = 0;
    return mu;
  }

  WTElement element(const SuiteOptions& o, std::int64_t min_level = 0) {
    return {weyl(3), coweight(o, min_level)};
  }
};

struct Recorder {
  SuiteReport& report;

  void check(bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) {
      ++report.violations;
      if (report.first_failure.empty()) report.first_failure = what;
    }
  }
};

std::string describe_pair(const WTElement& x, const WTElement& y) {
  return format_element(x) + "  |  " + format_element(y);
}

// Sample members of LP(x), materialising symbolic sets up to length 6.
std::vector<WeylElt> lp_members_for_tests(const LPSet& s) {
  if (s.kind == LPSet::Kind::Finite) return s.elems;
  std::vector<WeylElt> out{weyl_e()};
  for (std::int64_t len = 1; len <= 6; ++len) {
    if (s.kind == LPSet::Kind::All || s.half == Side::Left)
      out.push_back(element_on_side(Side::Left, len));
    if (s.kind == LPSet::Kind::All || s.half == Side::Right)
      out.push_back(element_on_side(Side::Right, len));
  }
  return out;
}

}  // namespace

SuiteReport suite_qbg(const SuiteOptions& opts) {
  SuiteReport report{"qbg"};
  Recorder rec{report};
  Sampler rng(opts.seed);
  const int count = opts.count > 0 ? opts.count : 200;

  for (int i = 0; i < count; ++i) {
    WeylElt u = rng.weyl(4), v = rng.weyl(4);
    std::string tag = "u=" + to_string(u) + " v=" + to_string(v);

    std::int64_t d = distance(u, v);
    rec.check(bfs_distance(u, v) == d, "bfs distance != closed form: " + tag);

    auto paths = shortest_paths(u, v);
    rec.check(!paths.empty(), "no shortest path found: " + tag);
    Coweight wt = weight(u, v);
    bool lengths_ok = true, weights_ok = true;
    for (const auto& p : paths) {
      lengths_ok = lengths_ok && p.len() == d;
      weights_ok = weights_ok && p.wt() == wt;
    }
    rec.check(lengths_ok, "enumerated path length != distance: " + tag);
    rec.check(weights_ok, "shortest-path weight mismatch: " + tag);

    rec.check(two_rho_pair(wt) == d + length(u) - length(v),
              "weight-height identity failed: " + tag);
    rec.check(bruhat_leq(u, v) == (wt == Coweight{}),
              "bruhat order vs zero-weight mismatch: " + tag);
  }
  return report;
}

SuiteReport suite_lp(const SuiteOptions& opts) {
  SuiteReport report{"lp"};
  Recorder rec{report};
  Sampler rng(opts.seed);
  const int count = opts.count > 0 ? opts.count : 1000;

  for (int i = 0; i < count; ++i) {
    WTElement x = rng.element(opts);
    std::string tag = format_element(x);
    LPSet s = lp_set(x);

    // Classification vs brute force over a window of candidates.
    std::int64_t t_window = std::max<std::int64_t>(std::llabs(x.mu.k), 1) + 3;
    bool agree = true;
    for (std::int64_t t = -t_window; t <= t_window && agree; ++t)
      for (int v0 = 0; v0 <= 1 && agree; ++v0) {
        WeylElt v{v0 == 1, t};
        agree = lp_set_contains(s, v) == lp_oracle(x, v);
      }
    rec.check(agree, "classification disagrees with oracle: " + tag);

    if (level(x) > 0) {
      rec.check(s.kind == LPSet::Kind::Finite, "level > 0 set not finite: " + tag);
      std::size_t max_size = x.mu.l == 1 ? 3 : 2;
      rec.check(!s.elems.empty() && s.elems.size() <= max_size,
                "size bound violated: " + tag);

      // Connectivity: sorted by length, consecutive members differ by one
      // right multiplication by a simple reflection.
      bool connected = true;
      for (std::size_t a = 0; a + 1 < s.elems.size(); ++a) {
        WeylElt diff = mul(inv(s.elems[a]), s.elems[a + 1]);
        connected = connected && (diff == weyl_s0() || diff == weyl_s1());
      }
      rec.check(connected, "finite set not connected: " + tag);

      std::vector<WeylElt> degenerate{weyl_s1(), weyl_e(), weyl_s0()};
      std::sort(degenerate.begin(), degenerate.end(), weyl_less);
      rec.check(s.elems != degenerate, "degenerate {s1,e,s0} set: " + tag);

      // One-sidedness, the identity being compatible with either side.
      Side common = Side::Both;
      bool one_sided = true;
      for (const WeylElt& v : s.elems) {
        Side sv = side(v);
        if (sv == Side::Both) continue;
        if (common == Side::Both)
          common = sv;
        else
          one_sided = one_sided && sv == common;
      }
      rec.check(one_sided, "set not one-sided: " + tag);
    } else {
      rec.check(s.kind != LPSet::Kind::Finite, "boundary set not symbolic: " + tag);
    }

    // us_b in LP(x) iff the length functional vanishes on u(b), b simple.
    for (const WeylElt& u : lp_members_for_tests(s)) {
      for (int b = 0; b <= 1; ++b) {
        bool member = lp_set_contains(s, mul(u, simple_reflection(b)));
        bool zero = length_functional(x, act_root(u, simple_root(b))) == 0;
        rec.check(member == zero, "lp-iff-zero failed: " + tag + " u=" + to_string(u));
      }
    }
  }
  return report;
}

SuiteReport suite_length(const SuiteOptions& opts) {
  SuiteReport report{"length"};
  Recorder rec{report};
  Sampler rng(opts.seed);
  const int count = opts.count > 0 ? opts.count : 500;

  for (int i = 0; i < count; ++i) {
    WTElement x = rng.element(opts);
    std::string tag = format_element(x);

    std::int64_t len = wt_length(x);
    rec.check(len == wt_length_via_inversions(x),
              "length vs inversion count mismatch: " + tag);

    // Witness independence of the length formula.
    for (const WeylElt& u : lp_members_for_tests(lp_set(x))) {
      std::int64_t via_u = two_rho_pair(act_coweight(inv(u), x.mu)) - length(u) +
                           length(mul(x.w, u));
      rec.check(via_u == len, "witness dependence: " + tag + " u=" + to_string(u));
    }

    WTElement y = rng.element(opts);
    WTElement xy = wt_mul(x, y);
    rec.check(level(xy) == level(x) + level(y), "levels not additive: " + tag);
    auto common = daf_inversions_intersection(x, y);
    rec.check(wt_length(xy) == wt_length(x) + wt_length(y) -
                  2 * static_cast<std::int64_t>(common.size()),
              "inversion-count length formula failed: " + describe_pair(x, y));
  }
  return report;
}

SuiteReport suite_demazure(const SuiteOptions& opts) {
  SuiteReport report{"demazure"};
  Recorder rec{report};
  Sampler rng(opts.seed);
  const int count = opts.count > 0 ? opts.count : 500;

  for (int i = 0; i < count; ++i) {
    WTElement x = rng.element(opts);
    WTElement y = rng.element(opts);
    std::string tag = describe_pair(x, y);

    DemazureResult res;
    try {
      res = dem_product(x, y);  // verifies pair-independence internally
    } catch (const std::exception& e) {
      rec.check(false, std::string("dem_product raised: ") + e.what() + ": " + tag);
      continue;
    }

    LPSet sx = lp_set(x), sy = lp_set(y);
    bool pairs_ok = !res.pairs.pairs.empty();
    for (const auto& [u, v] : res.pairs.pairs) {
      pairs_ok = pairs_ok && lp_set_contains(sx, u) && lp_set_contains(sy, v) &&
                 distance(u, mul(y.w, v)) == res.defect;
    }
    rec.check(pairs_ok, "minimising pairs invalid: " + tag);

    // Path independence through the BFS oracle, on pairs small enough to
    // enumerate.
    for (const auto& [u, v] : res.pairs.pairs) {
      WeylElt target = mul(y.w, v);
      if (length(u) > 7 || length(target) > 7) continue;
      Coweight wt = weight(u, target);
      for (const auto& p : shortest_paths(u, target))
        if (!(p.wt() == wt)) {
          rec.check(false, "path weight differs: " + tag);
          break;
        }
      break;  // one enumerated pair per product keeps the suite fast
    }

    rec.check(wt_length(res.product) == wt_length(x) + wt_length(y) - res.defect,
              "product length formula failed: " + tag);

    if (level(x) >= 1 && level(y) >= 1)
      rec.check(lp_of_product_check(x, y), "LP of product mismatch: " + tag);

    rec.check(additivity_equiv_check(x, y), "additivity biconditional failed: " + tag);

    auto common = daf_inversions_intersection(x, y);
    rec.check(wt_length(wt_mul(x, y)) == wt_length(x) + wt_length(y) -
                  2 * static_cast<std::int64_t>(common.size()),
              "inversion-count length identity failed: " + tag);

    // Distance minimisers against a positive-level set.  Away from the
    // bottom of the graph the minimiser is unique in both directions; when
    // the set is a chain through the identity with top at length two, the
    // identity and the top tie for sources on the opposite column.  That
    // single exception is pinned exactly.
    if (level(x) > 0) {
      WeylElt u = rng.weyl(4);
      LPSet s = lp_set(x);
      std::vector<WeylElt> to_min, from_min;
      std::int64_t best_to = -1, best_from = -1;
      for (const WeylElt& v : s.elems) {
        std::int64_t dt = distance(u, v), df = distance(v, u);
        if (best_to < 0 || dt < best_to) {
          best_to = dt;
          to_min.clear();
        }
        if (dt == best_to) to_min.push_back(v);
        if (best_from < 0 || df < best_from) {
          best_from = df;
          from_min.clear();
        }
        if (df == best_from) from_min.push_back(v);
      }
      rec.check(from_min.size() == 1, "reverse distance minimiser not unique: " +
                                          format_element(x) + " u=" + to_string(u));
      bool tie_shape = s.elems.size() == 3 && s.elems[0] == weyl_e() &&
                       length(s.elems[2]) == 2 && u != weyl_e() &&
                       !same_sided(u, s.elems[2]);
      if (tie_shape)
        rec.check(to_min.size() == 2 && to_min.front() == weyl_e() &&
                      to_min.back() == s.elems[2],
                  "tie through the identity has the wrong minimiser set: " +
                      format_element(x) + " u=" + to_string(u));
      else
        rec.check(to_min.size() == 1, "distance minimiser not unique: " +
                                          format_element(x) + " u=" + to_string(u));
    }

    // Multiplying by the semigroup identity is neutral.
    rec.check(dem_product(x, wt_identity()).product == x &&
                  dem_product(wt_identity(), x).product == x,
              "identity not neutral: " + format_element(x));
  }
  return report;
}

SuiteReport suite_assoc(const SuiteOptions& opts) {
  SuiteReport report{"assoc"};
  Recorder rec{report};
  Sampler rng(opts.seed);
  const int count = opts.count > 0 ? opts.count : 200;

  for (int i = 0; i < count; ++i) {
    WTElement x = rng.element(opts, 2);
    WTElement y = rng.element(opts, 2);
    WTElement z = rng.element(opts, 2);
    rec.check(assoc_check(x, y, z), "associativity failed: " + describe_pair(x, y) +
                                        "  |  " + format_element(z));
  }

  // Level-one triples are only recorded: associativity there is open when a
  // length-positive set has three elements.
  long long lvl1_total = 0, lvl1_ok = 0;
  Sampler lvl1(opts.seed + 1);
  for (int i = 0; i < count / 2; ++i) {
    SuiteOptions one = opts;
    one.max_l = 1;
    WTElement x = lvl1.element(one, 1);
    WTElement y = lvl1.element(one, 1);
    WTElement z = lvl1.element(one, 1);
    ++lvl1_total;
    if (assoc_check(x, y, z)) ++lvl1_ok;
  }
  report.notes.push_back("level-1 triples (recorded, not asserted): " +
                         std::to_string(lvl1_ok) + "/" + std::to_string(lvl1_total) +
                         " associative");
  return report;
}

std::vector<SuiteReport> suite_all(const SuiteOptions& opts) {
  return {suite_qbg(opts), suite_lp(opts), suite_length(opts),
          suite_demazure(opts), suite_assoc(opts)};
}

}  // namespace wtdem
