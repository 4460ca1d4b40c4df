// Acceptance harness: runs every criterion with its pinned budget and
// prints one PASS/FAIL line each.  Exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wtdem/demazure.hpp"
#include "wtdem/qbg.hpp"
#include "wtdem/suites.hpp"
#include "wtdem/text.hpp"

using namespace wtdem;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;  // <= 0: untimed
  std::function<bool(std::string&)> run;
};

std::vector<std::string> pending_notes;

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

std::vector<WeylElt> window(std::int64_t n) {
  std::vector<WeylElt> out{weyl_e()};
  for (std::int64_t len = 1; len <= n; ++len) {
    out.push_back(element_on_side(Side::Left, len));
    out.push_back(element_on_side(Side::Right, len));
  }
  return out;
}

std::vector<WeylElt> sorted_words(std::initializer_list<const char*> words) {
  std::vector<WeylElt> out;
  for (const char* w : words) out.push_back(parse_word(w));
  std::sort(out.begin(), out.end(), weyl_less);
  return out;
}

bool check_lp(const WTElement& x, std::initializer_list<const char*> words,
              std::string& detail) {
  LPSet s = lp_set(x);
  return expect(s.kind == LPSet::Kind::Finite && s.elems == sorted_words(words),
                "LP(" + format_element(x) + ") mismatch", detail);
}

bool criterion_additive_pair(std::string& detail) {
  // x = eps^{d+L} s0 s1 and y = eps^{4d+L}, built exactly as written.
  WTElement x = wt_mul({weyl_e(), {0, 1, 1}}, {parse_word("s0 s1"), {0, 0, 0}});
  WTElement y{weyl_e(), {0, 4, 1}};
  bool ok = expect(x == parse_element("s0 s1 e[-1a+0d+1L]"), "x normal form", detail);
  ok &= check_lp(x, {"s1 s0", "s1 s0 s1", "s1"}, detail);
  ok &= check_lp(y, {"e", "s1"}, detail);
  MinPairs mp = min_pairs(x, y);
  ok &= expect(mp.dist == 0 && mp.pairs.size() == 1 &&
                   mp.pairs[0].first == weyl_s1() && mp.pairs[0].second == weyl_s1(),
               "minimising pairs mismatch", detail);
  DemazureResult res = dem_product(x, y);
  ok &= expect(res.product == wt_mul(x, y), "x*y != xy", detail);
  ok &= expect(res.product == parse_element("s0 s1 e[-1a+4d+2L]"),
               "x*y normal form mismatch", detail);
  return ok;
}

bool criterion_nonadditive_pair(std::string& detail) {
  WTElement x = wt_mul({weyl_e(), {0, 0, 1}}, {parse_word("s0 s1 s0"), {0, 0, 0}});
  WTElement y = wt_mul({weyl_e(), {0, 0, 1}}, {parse_word("s0"), {0, 0, 0}});
  bool ok = expect(x == parse_element("s0 s1 s0 e[2a-4d+1L]"), "x normal form", detail);
  ok &= expect(y == parse_element("s0 e[1a-1d+1L]"), "y normal form", detail);
  ok &= check_lp(x, {"s0 s1 s0 s1", "s0 s1 s0", "s0 s1"}, detail);
  ok &= check_lp(y, {"s0 s1", "s0", "e"}, detail);
  ok &= expect(!is_length_additive(x, y), "LP(x) and w_y LP(y) should not meet", detail);
  ok &= expect(weight(parse_word("s0 s1"), parse_word("s0")) == Coweight{1, 0, 0},
               "wt(s0 s1 => s0) != a^", detail);
  DemazureResult res = dem_product(x, y);
  ok &= expect(res.product == parse_element("s0 e[1a-2d+2L]"),
               "x*y normal form mismatch", detail);
  ok &= expect(wt_length(res.product) == wt_length(x) + wt_length(y) - 1,
               "len(x*y) != len(x)+len(y)-1", detail);
  return ok;
}

bool criterion_lp_figures(std::string& detail) {
  bool ok = check_lp(parse_element("s1 s0 e[-2a+1d+4L]"), {"s1", "s1 s0"}, detail);
  ok &= check_lp(parse_element("s1 t[-1] e[1a-1d+1L]"), {"e", "s0", "s0 s1"}, detail);
  return ok;
}

bool criterion_qbg_oracle(std::string& detail) {
  bool ok = true;
  for (const WeylElt& u : window(8)) {
    for (const WeylElt& v : window(8)) {
      std::string tag = " at u=" + to_string(u) + " v=" + to_string(v);
      std::int64_t d = distance(u, v);
      ok &= expect(bfs_distance(u, v) == d, "BFS distance != closed form" + tag, detail);
      auto paths = shortest_paths(u, v);
      ok &= expect(!paths.empty(), "no shortest path" + tag, detail);
      Coweight wt = weight(u, v);
      for (const auto& p : paths) {
        ok &= expect(p.len() == d, "path length != distance" + tag, detail);
        ok &= expect(p.wt() == wt, "path weight mismatch" + tag, detail);
      }
      if (!ok) return false;
    }
  }
  return ok;
}

bool run_suite(SuiteReport (*suite)(const SuiteOptions&), int count,
               std::string& detail) {
  SuiteOptions opts;
  opts.seed = 1;
  opts.count = count;
  opts.max_k = 6;
  opts.max_m = 6;
  opts.max_l = 5;
  SuiteReport report = suite(opts);
  pending_notes = report.notes;
  return expect(report.passed(),
                report.name + ": " + std::to_string(report.violations) +
                    " violation(s), first: " + report.first_failure,
                detail);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"additive worked example reproduced", 1.0, criterion_additive_pair},
      {"non-additive worked example reproduced", 1.0, criterion_nonadditive_pair},
      {"length-positive sets of the two figure elements", 0.0, criterion_lp_figures},
      {"QBG closed forms == BFS oracle on all pairs of length <= 8", 10.0,
       criterion_qbg_oracle},
      {"LP classification == brute force on 1000 random elements", 30.0,
       [](std::string& d) { return run_suite(suite_lp, 1000, d); }},
      {"Demazure product properties on 500 random pairs", 60.0,
       [](std::string& d) { return run_suite(suite_demazure, 500, d); }},
      {"associativity on 200 random level>=2 triples", 60.0,
       [](std::string& d) { return run_suite(suite_assoc, 200, d); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      ok = false;
      if (detail.empty())
        detail = "exceeded budget of " + std::to_string(c.budget_seconds) + " s";
    }
    std::printf("%s  criterion %zu: %s (%.3f s)\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), elapsed);
    for (const std::string& note : pending_notes)
      std::printf("      note: %s\n", note.c_str());
    pending_notes.clear();
    if (!ok) {
      ++failures;
      std::printf("      %s\n", detail.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
