#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cochordal/error.hpp"
#include "cochordal/graph.hpp"

namespace cochordal {

/// A permutation of the vertex indices of a graph.
struct EliminationOrder {
  std::vector<std::size_t> order;

  friend bool operator==(const EliminationOrder&, const EliminationOrder&) = default;
};

/// Maximum-cardinality search. Returns vertices in visit order: each step
/// visits an unvisited vertex with the most visited neighbors, smallest
/// index on ties. The reverse of this order is a perfect elimination
/// ordering exactly when the graph is chordal.
inline EliminationOrder mcs_order(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  EliminationOrder out;
  out.order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    visited[best] = 1;
    out.order.push_back(best);
    for_each_vertex(g.neighbors(best), [&](std::size_t u) { ++weight[u]; });
  }
  return out;
}

/// Reverse of the MCS visit order.
inline EliminationOrder perfect_elimination_candidate(const SimpleGraph& g) {
  EliminationOrder ord = mcs_order(g);
  std::reverse(ord.order.begin(), ord.order.end());
  return ord;
}

/// True iff, for every vertex, its neighbors appearing later in `ord` form a clique.
inline bool is_perfect_elimination(const SimpleGraph& g, const EliminationOrder& ord) {
  const std::size_t n = g.order();
  if (ord.order.size() != n) throw Error(Errc::not_a_permutation, "length mismatch");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t v = ord.order[t];
    if (v >= n || pos[v] != n) throw Error(Errc::not_a_permutation, "repeated or out-of-range entry");
    pos[v] = t;
  }
  // Standard check: for each v, let p be its earliest later neighbor; the
  // other later neighbors of v must be adjacent to p.
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t v = ord.order[t];
    std::size_t parent = n;
    VertexSet later = g.empty_set();
    for_each_vertex(g.neighbors(v), [&](std::size_t u) {
      if (pos[u] > t) {
        later.set(u);
        if (parent == n || pos[u] < pos[parent]) parent = u;
      }
    });
    if (parent == n) continue;
    later.reset(parent);
    if (!later.is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

inline bool is_chordal(const SimpleGraph& g) {
  return is_perfect_elimination(g, perfect_elimination_candidate(g));
}

inline bool is_cochordal(const SimpleGraph& g) { return is_chordal(complement(g)); }

/// Non-neighbors of v among `alive`, excluding v itself.
inline VertexSet non_neighbors(const SimpleGraph& g, std::size_t v, const VertexSet& alive) {
  VertexSet s = alive - g.neighbors(v);
  s.reset(v);
  return s;
}

/// v is eligible in G[alive] iff its non-neighbors there are independent,
/// i.e. v is simplicial in the complement.
inline bool is_eligible(const SimpleGraph& g, std::size_t v, const VertexSet& alive) {
  return is_independent(g, non_neighbors(g, v, alive));
}

inline VertexSet eligible_vertices(const SimpleGraph& g, const VertexSet& alive) {
  VertexSet out = g.empty_set();
  for_each_vertex(alive, [&](std::size_t v) {
    if (is_eligible(g, v, alive)) out.set(v);
  });
  return out;
}

inline VertexSet eligible_vertices(const SimpleGraph& g) {
  return eligible_vertices(g, g.all_vertices());
}

}  // namespace cochordal
