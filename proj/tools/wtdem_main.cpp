// wtdem: queries against the double affine Weyl semigroup of affine SL2.
//
// Exit codes: 0 success, 1 property or golden violation, 2 parse error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wtdem/demazure.hpp"
#include "wtdem/error.hpp"
#include "wtdem/qbg.hpp"
#include "wtdem/suites.hpp"
#include "wtdem/text.hpp"

using namespace wtdem;
using nlohmann::json;

namespace {

constexpr int kSchema = 1;

json element_json(const WTElement& x) {
  return json{{"w", to_string(x.w)},
              {"mu", {x.mu.k, x.mu.m, x.mu.l}},
              {"level", level(x)},
              {"length", wt_length(x)}};
}

json lp_json(const LPSet& s) {
  switch (s.kind) {
    case LPSet::Kind::All:
      return json{{"kind", "all"}};
    case LPSet::Kind::HalfSide:
      return json{{"kind", "half"}, {"side", s.half == Side::Left ? "LEFT" : "RIGHT"}};
    default: {
      json elems = json::array();
      for (const auto& v : s.elems) elems.push_back(to_string(v));
      return json{{"kind", "finite"}, {"elems", elems}};
    }
  }
}

json edge_json(const QbgEdge& e) {
  return json{{"src", to_string(e.src)},
              {"dst", to_string(e.dst)},
              {"kind", e.kind == EdgeKind::Bruhat ? "bruhat" : "quantum"},
              {"weight", {e.weight.k, e.weight.m, e.weight.l}}};
}

void emit(const json& payload, bool as_json, const std::string& text) {
  if (as_json) {
    json out = payload;
    out["schema"] = kSchema;
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("%s\n", text.c_str());
  }
}

std::string lp_text(const LPSet& s) {
  switch (s.kind) {
    case LPSet::Kind::All:
      return "ALL";
    case LPSet::Kind::HalfSide:
      return s.half == Side::Left ? "LEFT" : "RIGHT";
    default: {
      std::string out = "{";
      for (std::size_t i = 0; i < s.elems.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s.elems[i]);
      }
      return out + "}";
    }
  }
}

int run_examples(bool as_json) {
  struct Mismatch {
    std::string field, expected, got;
  };
  std::vector<Mismatch> diffs;
  auto diff = [&](const std::string& field, const std::string& expected,
                  const std::string& got) {
    if (expected != got) diffs.push_back({field, expected, got});
  };

  // Additive pair: the product collapses to the semigroup product.
  {
    WTElement x = parse_element("s0 s1 e[-1a+0d+1L]");
    WTElement y = parse_element("e e[0a+4d+1L]");
    diff("additive.lp_x", "{s1, s1 s0, s1 s0 s1}", lp_text(lp_set(x)));
    diff("additive.lp_y", "{e, s1}", lp_text(lp_set(y)));
    DemazureResult res = dem_product(x, y);
    diff("additive.product", "s0 s1 e[-1a+4d+2L]", format_element(res.product));
    diff("additive.dist", "0", std::to_string(res.defect));
    diff("additive.equals_semigroup_product",
         "true", res.product == wt_mul(x, y) ? "true" : "false");
  }

  // Non-additive pair: defect one, and the length relation with it.
  {
    WTElement x = parse_element("s0 s1 s0 e[2a-4d+1L]");
    WTElement y = parse_element("s0 e[1a-1d+1L]");
    diff("nonadditive.lp_x", "{s0 s1, s0 s1 s0, s0 s1 s0 s1}", lp_text(lp_set(x)));
    diff("nonadditive.lp_y", "{e, s0, s0 s1}", lp_text(lp_set(y)));
    DemazureResult res = dem_product(x, y);
    diff("nonadditive.product", "s0 e[1a-2d+2L]", format_element(res.product));
    diff("nonadditive.dist", "1", std::to_string(res.defect));
    diff("nonadditive.length_relation", "true",
         wt_length(res.product) == wt_length(x) + wt_length(y) - 1 ? "true"
                                                                   : "false");
    diff("nonadditive.additive", "false",
         is_length_additive(x, y) ? "true" : "false");
  }

  if (as_json) {
    json out{{"schema", kSchema}, {"ok", diffs.empty()}};
    out["mismatches"] = json::array();
    for (const auto& d : diffs)
      out["mismatches"].push_back(
          {{"field", d.field}, {"expected", d.expected}, {"got", d.got}});
    std::printf("%s\n", out.dump(2).c_str());
  } else if (diffs.empty()) {
    std::printf("examples: all golden values reproduced\n");
  } else {
    for (const auto& d : diffs)
      std::printf("MISMATCH %s: expected %s, got %s\n", d.field.c_str(),
                  d.expected.c_str(), d.got.c_str());
  }
  return diffs.empty() ? 0 : 1;
}

int run_verify(const std::string& suite, const SuiteOptions& opts, bool as_json) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = suite_all(opts);
  } else if (suite == "qbg") {
    reports = {suite_qbg(opts)};
  } else if (suite == "lp") {
    reports = {suite_lp(opts)};
  } else if (suite == "length") {
    reports = {suite_length(opts)};
  } else if (suite == "demazure") {
    reports = {suite_demazure(opts)};
  } else if (suite == "assoc") {
    reports = {suite_assoc(opts)};
  } else {
    std::fprintf(stderr, "unknown suite '%s'\n", suite.c_str());
    return 2;
  }

  bool all_ok = true;
  json jreports = json::array();
  for (const auto& r : reports) {
    all_ok = all_ok && r.passed();
    if (as_json) {
      json jr{{"suite", r.name},
              {"checks", r.checks},
              {"violations", r.violations},
              {"notes", r.notes}};
      if (!r.passed()) jr["first_failure"] = r.first_failure;
      jreports.push_back(jr);
    } else {
      std::printf("%-8s  %6lld checks  %4lld violations  %s\n", r.name.c_str(),
                  r.checks, r.violations, r.passed() ? "pass" : "FAIL");
      if (!r.passed())
        std::printf("          first counterexample: %s\n", r.first_failure.c_str());
      for (const auto& note : r.notes) std::printf("          %s\n", note.c_str());
    }
  }
  if (as_json) {
    json out{{"schema", kSchema}, {"ok", all_ok}, {"reports", jreports}};
    std::printf("%s\n", out.dump(2).c_str());
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Demazure products on the double affine Weyl semigroup"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON (schema 1)");

  std::string arg_x, arg_y, arg_z, suite = "all";
  SuiteOptions opts;

  auto* lp_cmd = app.add_subcommand("lp", "length-positive set of an element");
  lp_cmd->add_option("element", arg_x)->required();

  auto* len_cmd = app.add_subcommand("len", "length of an element");
  len_cmd->add_option("element", arg_x)->required();

  auto* mul_cmd = app.add_subcommand("mul", "semigroup product");
  mul_cmd->add_option("x", arg_x)->required();
  mul_cmd->add_option("y", arg_y)->required();

  auto* dem_cmd = app.add_subcommand("dem", "generalized Demazure product");
  dem_cmd->add_option("x", arg_x)->required();
  dem_cmd->add_option("y", arg_y)->required();

  auto* minp_cmd = app.add_subcommand("minpairs", "distance minimising pairs");
  minp_cmd->add_option("x", arg_x)->required();
  minp_cmd->add_option("y", arg_y)->required();

  auto* dist_cmd = app.add_subcommand("qbg-dist", "quantum Bruhat graph distance");
  dist_cmd->add_option("u", arg_x)->required();
  dist_cmd->add_option("v", arg_y)->required();

  auto* wt_cmd = app.add_subcommand("qbg-wt", "weight of shortest paths");
  wt_cmd->add_option("u", arg_x)->required();
  wt_cmd->add_option("v", arg_y)->required();

  auto* paths_cmd = app.add_subcommand("qbg-paths", "all shortest paths");
  paths_cmd->add_option("u", arg_x)->required();
  paths_cmd->add_option("v", arg_y)->required();

  auto* examples_cmd =
      app.add_subcommand("examples", "recompute the embedded worked examples");

  auto* verify_cmd = app.add_subcommand("verify", "randomized verification suites");
  verify_cmd->add_option("suite", suite, "qbg|lp|length|demazure|assoc|all");
  verify_cmd->add_option("--seed", opts.seed, "random seed");
  verify_cmd->add_option("--count", opts.count, "iterations (0: suite default)");
  verify_cmd->add_option("--max-k", opts.max_k, "sampling bound for |k|");
  verify_cmd->add_option("--max-m", opts.max_m, "sampling bound for |m|");
  verify_cmd->add_option("--max-l", opts.max_l, "sampling bound for the level");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lp_cmd->parsed()) {
      WTElement x = parse_element(arg_x);
      LPSet s = lp_set(x);
      emit(json{{"element", element_json(x)}, {"lp", lp_json(s)}}, as_json,
           lp_text(s));
      return 0;
    }
    if (len_cmd->parsed()) {
      WTElement x = parse_element(arg_x);
      emit(json{{"element", element_json(x)}}, as_json,
           std::to_string(wt_length(x)));
      return 0;
    }
    if (mul_cmd->parsed()) {
      WTElement p = wt_mul(parse_element(arg_x), parse_element(arg_y));
      emit(json{{"product", element_json(p)}}, as_json, format_element(p));
      return 0;
    }
    if (dem_cmd->parsed()) {
      WTElement x = parse_element(arg_x), y = parse_element(arg_y);
      DemazureResult res = dem_product(x, y);
      bool length_check =
          wt_length(res.product) == wt_length(x) + wt_length(y) - res.defect;
      json pairs = json::array();
      for (const auto& [u, v] : res.pairs.pairs)
        pairs.push_back({to_string(u), to_string(v)});
      emit(json{{"product", element_json(res.product)},
                {"pairs", pairs},
                {"dist", res.defect},
                {"uv_inverse", to_string(res.uv_inverse)},
                {"v_weight", {res.v_weight.k, res.v_weight.m, res.v_weight.l}},
                {"length_check", length_check}},
           as_json,
           format_element(res.product) + "   (defect " +
               std::to_string(res.defect) + ")");
      return length_check ? 0 : 1;
    }
    if (minp_cmd->parsed()) {
      MinPairs mp = min_pairs(parse_element(arg_x), parse_element(arg_y));
      json pairs = json::array();
      std::string text = "dist " + std::to_string(mp.dist) + ":";
      for (const auto& [u, v] : mp.pairs) {
        pairs.push_back({to_string(u), to_string(v)});
        text += " (" + to_string(u) + ", " + to_string(v) + ")";
      }
      if (mp.truncated) text += " ...";
      emit(json{{"dist", mp.dist}, {"pairs", pairs}, {"truncated", mp.truncated}},
           as_json, text);
      return 0;
    }
    if (dist_cmd->parsed()) {
      std::int64_t d = distance(parse_word(arg_x), parse_word(arg_y));
      emit(json{{"dist", d}}, as_json, std::to_string(d));
      return 0;
    }
    if (wt_cmd->parsed()) {
      Coweight w = weight(parse_word(arg_x), parse_word(arg_y));
      emit(json{{"weight", {w.k, w.m, w.l}}}, as_json, to_string(w));
      return 0;
    }
    if (paths_cmd->parsed()) {
      auto paths = shortest_paths(parse_word(arg_x), parse_word(arg_y));
      json jpaths = json::array();
      for (const auto& p : paths) {
        json edges = json::array();
        for (const auto& e : p.edges) edges.push_back(edge_json(e));
        jpaths.push_back(edges);
      }
      std::string text = std::to_string(paths.size()) + " shortest path(s)";
      emit(json{{"paths", jpaths}}, as_json, text);
      return 0;
    }
    if (examples_cmd->parsed()) return run_examples(as_json);
    if (verify_cmd->parsed()) return run_verify(suite, opts, as_json);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const OutsideTitsCone& e) {
    std::fprintf(stderr, "invalid element: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
