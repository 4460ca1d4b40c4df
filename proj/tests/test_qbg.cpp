#include <algorithm>

#include "doctest.h"
#include "wtdem/qbg.hpp"

using namespace wtdem;

namespace {

std::vector<WeylElt> window(std::int64_t n) {
  std::vector<WeylElt> out{weyl_e()};
  for (std::int64_t len = 1; len <= n; ++len) {
    out.push_back(element_on_side(Side::Left, len));
    out.push_back(element_on_side(Side::Right, len));
  }
  return out;
}

}  // namespace

TEST_CASE("edges from the identity are the two ascents") {
  auto edges = edges_from(weyl_e(), 8);
  REQUIRE(edges.size() == 2);
  for (const auto& e : edges) {
    CHECK(e.kind == EdgeKind::Bruhat);
    CHECK(e.weight == Coweight{});
    CHECK(length(e.dst) == 1);
  }
}

TEST_CASE("quantum edges remove the last letter") {
  auto has_quantum_to = [](const std::vector<QbgEdge>& edges, const WeylElt& dst,
                           const Coweight& wt) {
    return std::any_of(edges.begin(), edges.end(), [&](const QbgEdge& e) {
      return e.kind == EdgeKind::Quantum && e.dst == dst && e.weight == wt;
    });
  };
  CHECK(has_quantum_to(edges_from(from_word({1, 0}), 8), weyl_s1(), {-1, 1, 0}));
  CHECK(has_quantum_to(edges_from(from_word({0, 1}), 8), weyl_s0(), {1, 0, 0}));
  for (const WeylElt& v : window(7)) {
    auto edges = edges_from(v, 20);
    int quantum = 0;
    for (const auto& e : edges)
      if (e.kind == EdgeKind::Quantum) {
        ++quantum;
        CHECK(length(e.dst) == length(v) - 1);
        CHECK(is_prefix(e.dst, v));
      }
    CHECK(quantum == (v == weyl_e() ? 0 : 1));
  }
}

TEST_CASE("distance closed form") {
  for (const WeylElt& w : window(8)) CHECK(distance(weyl_e(), w) == length(w));
  CHECK(distance(from_word({0, 1}), weyl_s0()) == 1);
  CHECK(distance(weyl_s0(), weyl_s1()) == 2);
}

TEST_CASE("weight closed form") {
  CHECK(weight(from_word({0, 1}), from_word({0, 1})) == Coweight{});
  CHECK(weight(from_word({0, 1}), weyl_s0()) == Coweight{1, 0, 0});
  CHECK(weight(from_word({0, 1, 0}), weyl_s0()) == Coweight{0, 1, 0});
}

TEST_CASE("path enumeration basics") {
  auto paths = shortest_paths(weyl_e(), weyl_s0());
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].edges.size() == 1);
  CHECK(paths[0].edges[0].kind == EdgeKind::Bruhat);

  for (const auto& p : shortest_paths(from_word({0, 1}), weyl_s0()))
    CHECK(p.wt() == Coweight{1, 0, 0});

  auto ps = shortest_paths(from_word({0, 1, 0}), weyl_s1());
  REQUIRE(!ps.empty());
  for (const auto& p : ps) CHECK(p.wt() == ps[0].wt());
}

TEST_CASE("oracle equivalence on a window") {
  for (const WeylElt& u : window(6)) {
    for (const WeylElt& v : window(6)) {
      std::int64_t d = distance(u, v);
      CHECK(bfs_distance(u, v) == d);
      auto paths = shortest_paths(u, v);
      CHECK(!paths.empty());
      Coweight wt = weight(u, v);
      for (const auto& p : paths) {
        CHECK(p.len() == d);
        CHECK(p.wt() == wt);
      }
      CHECK(two_rho_pair(wt) == d + length(u) - length(v));
      CHECK(bruhat_leq(u, v) == (wt == Coweight{}));
    }
  }
}

TEST_CASE("paths are consecutive") {
  for (const auto& p : shortest_paths(from_word({1, 0, 1}), from_word({0, 1}))) {
    for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
      CHECK(p.edges[i].dst == p.edges[i + 1].src);
    CHECK(p.edges.front().src == from_word({1, 0, 1}));
    CHECK(p.edges.back().dst == from_word({0, 1}));
  }
}
