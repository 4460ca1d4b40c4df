#include "wtdem/qbg.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <utility>

#include "wtdem/error.hpp"

namespace wtdem {

namespace {

// Coroot of the letter removed when the column element of length `len` on
// side `s` drops to length `len - 1`.
Coweight descent_coroot(Side s, std::int64_t len) {
  int left_letter = len % 2 == 1 ? 0 : 1;
  int letter = s == Side::Left ? left_letter : 1 - left_letter;
  return coroot(simple_root(letter));
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

using Key = std::pair<bool, std::int64_t>;
Key key(const WeylElt& w) { return {w.v0, w.t}; }

constexpr std::int64_t kUnreached = -1;

// The graph restricted to elements of length <= cap: every vertex, every
// edge, and BFS distances from `u` along edges (forward) or against them
// (reverse).  Small by construction: 2*cap + 1 vertices.
struct TruncatedGraph {
  std::int64_t cap;
  std::vector<WeylElt> vertices;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<QbgEdge>> out;

  explicit TruncatedGraph(std::int64_t cap_) : cap(cap_) {
    vertices.push_back(weyl_e());
    for (std::int64_t len = 1; len <= cap; ++len) {
      vertices.push_back(element_on_side(Side::Left, len));
      vertices.push_back(element_on_side(Side::Right, len));
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) index[key(vertices[i])] = i;
    out.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (const auto& e : edges_from(vertices[i], cap + 2)) {
        if (length(e.dst) <= cap) out[i].push_back(e);
      }
    }
  }

  std::size_t at(const WeylElt& w) const { return index.at(key(w)); }

  std::vector<std::int64_t> bfs(const WeylElt& from, bool reverse) const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (const auto& e : out[i]) {
        std::size_t j = at(e.dst);
        if (reverse)
          adj[j].push_back(i);
        else
          adj[i].push_back(j);
      }
    std::vector<std::int64_t> dist(vertices.size(), kUnreached);
    std::deque<std::size_t> queue{at(from)};
    dist[at(from)] = 0;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j : adj[i]) {
        if (dist[j] == kUnreached) {
          dist[j] = dist[i] + 1;
          queue.push_back(j);
        }
      }
    }
    return dist;
  }

  // A shortest path can only be affected by the truncation if it passes
  // through the outermost ring, where out-edges are invisible.
  void check_frontier(const std::vector<std::int64_t>& from_u,
                      const std::vector<std::int64_t>& to_v,
                      std::int64_t target) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (length(vertices[i]) < cap - 1) continue;
      if (from_u[i] == kUnreached || to_v[i] == kUnreached) continue;
      if (from_u[i] + to_v[i] <= target)
        throw TruncationTooSmall("qbg: shortest path touches truncation cap");
    }
  }
};

}  // namespace

std::vector<QbgEdge> edges_from(const WeylElt& v, std::int64_t bound) {
  std::vector<QbgEdge> out;
  std::int64_t lv = length(v);
  for (Side s : {Side::Left, Side::Right}) {
    WeylElt b = element_on_side(s, lv + 1);
    AffineRoot r = positive_root_of_reflection(mul(inv(v), b));
    if (abs64(r.n) <= bound) out.push_back({v, b, EdgeKind::Bruhat, Coweight{}});
  }
  for (int i : {0, 1}) {
    WeylElt d = mul(v, simple_reflection(i));
    if (length(d) == lv - 1)
      out.push_back({v, d, EdgeKind::Quantum, coroot(simple_root(i))});
  }
  return out;
}

std::int64_t distance(const WeylElt& u, const WeylElt& v) {
  if (u == v) return 0;
  std::int64_t lu = length(u), lv = length(v);
  if (lu < lv) return lv - lu;
  if (lu > lv && same_sided(u, v)) return lu - lv;
  return lu - lv + 2;
}

Coweight weight(const WeylElt& u, const WeylElt& v) {
  if (u == v || length(u) < length(v)) return {};
  std::int64_t lu = length(u), lv = length(v);
  Side col = side(u);
  Coweight w;
  if (same_sided(u, v)) {
    // pure descent along u's column, removing letters lv+1 .. lu
    for (std::int64_t c = lv + 1; c <= lu; ++c) w = w + descent_coroot(col, c);
  } else {
    // descend to lv - 1, then one diagonal Bruhat edge into v
    for (std::int64_t c = lv; c <= lu; ++c) w = w + descent_coroot(col, c);
  }
  return w;
}

std::int64_t bfs_distance(const WeylElt& u, const WeylElt& v) {
  TruncatedGraph g(length(u) + length(v) + 4);
  std::vector<std::int64_t> from_u = g.bfs(u, false);
  std::int64_t d = from_u[g.at(v)];
  if (d == kUnreached) throw TruncationTooSmall("qbg: target not reached inside truncation");
  g.check_frontier(from_u, g.bfs(v, true), d);
  return d;
}

std::vector<QbgPath> shortest_paths(const WeylElt& u, const WeylElt& v) {
  TruncatedGraph g(length(u) + length(v) + 4);
  std::vector<std::int64_t> from_u = g.bfs(u, false);
  std::vector<std::int64_t> to_v = g.bfs(v, true);
  std::int64_t target = from_u[g.at(v)];
  if (target == kUnreached)
    throw TruncationTooSmall("qbg: target not reached inside truncation");
  g.check_frontier(from_u, to_v, target);

  // Walk the shortest-path DAG: an edge a -> b lies on a shortest path iff
  // from_u[a] + 1 + to_v[b] == target.
  std::vector<QbgPath> paths;
  QbgPath current;
  auto extend = [&](auto&& self, std::size_t i, std::int64_t depth) -> void {
    if (depth == target) {
      paths.push_back(current);
      return;
    }
    for (const auto& e : g.out[i]) {
      std::size_t j = g.at(e.dst);
      if (from_u[i] != depth || to_v[j] == kUnreached || depth + 1 + to_v[j] != target)
        continue;
      current.edges.push_back(e);
      self(self, j, depth + 1);
      current.edges.pop_back();
    }
  };
  extend(extend, g.at(u), 0);
  return paths;
}

}  // namespace wtdem
