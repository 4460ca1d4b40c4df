#pragma once

#include <cstdint>
#include <vector>

#include "wtdem/roots.hpp"
#include "wtdem/weyl.hpp"

// The quantum Bruhat graph of the infinite dihedral group.  Vertices are
// group elements; Bruhat edges v -> v*s_r raise length by one and carry
// weight zero, quantum edges v -> v*s_i (i simple) lower length by one and
// carry weight coroot(a_i).  Distance and weight admit closed forms:
//
//   d(u => v) = |len(u) - len(v)|      if u <= v, or u >= v same-sided,
//               |len(u) - len(v)| + 2  otherwise,
//
// and the weight of every shortest path is the sum of the coroots of the
// letters removed while descending u's column (plus nothing for Bruhat
// edges).  Paths are materialised only by the BFS oracle.

namespace wtdem {

enum class EdgeKind { Bruhat, Quantum };

struct QbgEdge {
  WeylElt src;
  WeylElt dst;
  EdgeKind kind = EdgeKind::Bruhat;
  Coweight weight;

  friend bool operator==(const QbgEdge&, const QbgEdge&) = default;
};

struct QbgPath {
  std::vector<QbgEdge> edges;

  std::int64_t len() const { return static_cast<std::int64_t>(edges.size()); }
  Coweight wt() const {
    Coweight w;
    for (const auto& e : edges) w = w + e.weight;
    return w;
  }
};

// All outgoing edges whose reflection root has |n| <= bound, plus the
// quantum edges by simple roots.  Every vertex has exactly two Bruhat edges
// (to the two elements one longer) and at most one quantum edge.
std::vector<QbgEdge> edges_from(const WeylElt& v, std::int64_t bound);

std::int64_t distance(const WeylElt& u, const WeylElt& v);
Coweight weight(const WeylElt& u, const WeylElt& v);

// Every shortest path u => v on the graph truncated at
// length <= len(u) + len(v) + 4.  Throws TruncationTooSmall if the search
// frontier ever touches the cap.  Oracle-grade: uses BFS only, none of the
// closed forms above.
std::vector<QbgPath> shortest_paths(const WeylElt& u, const WeylElt& v);

// BFS distance on the same truncated graph (oracle for `distance`).
std::int64_t bfs_distance(const WeylElt& u, const WeylElt& v);

}  // namespace wtdem
