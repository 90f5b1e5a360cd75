#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cochordal/bigint.hpp"
#include "cochordal/error.hpp"

namespace cochordal {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

/// Visits the members of a vertex set in ascending order.
template <typename F>
void for_each_vertex(const VertexSet& s, F&& f) {
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) f(v);
}

inline std::vector<std::size_t> members(const VertexSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for_each_vertex(s, [&](std::size_t v) { out.push_back(v); });
  return out;
}

/// Finite simple graph on dense indices 0..order-1 with bitset rows.
///
/// Each vertex carries an external label; labels are pairwise distinct and
/// survive induced subgraphs. Immutable after construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Builds a graph from index pairs. Duplicate edges are merged.
  /// Labels default to the vertex indices.
  SimpleGraph(std::size_t order, std::span<const Edge> edges, std::vector<Label> labels = {})
      : adj_(order, VertexSet(order)), labels_(std::move(labels)) {
    if (order > kMaxOrder) {
      throw Error(Errc::cap_exceeded, "graph order " + std::to_string(order) + " exceeds 2^20");
    }
    if (labels_.empty()) {
      labels_.resize(order);
      for (std::size_t v = 0; v < order; ++v) labels_[v] = v;
    }
    if (labels_.size() != order) {
      throw Error(Errc::index_out_of_range, "label count does not match order");
    }
    for (const auto& [u, v] : edges) {
      if (u >= order || v >= order) {
        throw Error(Errc::index_out_of_range,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with order " +
                        std::to_string(order));
      }
      if (u == v) throw Error(Errc::self_loop, "vertex " + std::to_string(u));
      adj_[u].set(v);
      adj_[v].set(u);
    }
    index_labels();
  }

  SimpleGraph(std::size_t order, std::initializer_list<Edge> edges)
      : SimpleGraph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds directly from symmetric, irreflexive adjacency rows.
  static SimpleGraph from_rows(std::vector<VertexSet> rows, std::vector<Label> labels) {
    SimpleGraph g;
    g.adj_ = std::move(rows);
    g.labels_ = std::move(labels);
    g.index_labels();
    return g;
  }

  std::size_t order() const noexcept { return adj_.size(); }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  Label label(std::size_t v) const { return labels_[v]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> index_of(Label l) const {
    auto it = std::lower_bound(by_label_.begin(), by_label_.end(), std::make_pair(l, std::size_t{0}));
    if (it == by_label_.end() || it->first != l) return std::nullopt;
    return it->second;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  /// Edges (u, v) with u < v, lexicographic.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u) {
      for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) {
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return ~VertexSet(order()); }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void index_labels() {
    by_label_.clear();
    by_label_.reserve(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) by_label_.emplace_back(labels_[v], v);
    std::sort(by_label_.begin(), by_label_.end());
    for (std::size_t t = 1; t < by_label_.size(); ++t) {
      if (by_label_[t].first == by_label_[t - 1].first) {
        throw Error(Errc::duplicate_label, "label " + std::to_string(by_label_[t].first));
      }
    }
  }

  std::vector<VertexSet> adj_;
  std::vector<Label> labels_;
  std::vector<std::pair<Label, std::size_t>> by_label_;
};

inline SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) {
    rows[v] = ~g.neighbors(v);
    rows[v].reset(v);
  }
  return SimpleGraph::from_rows(std::move(rows), g.labels());
}

/// Subgraph induced on `w`; vertex indices are renumbered ascending, labels kept.
inline SimpleGraph induced(const SimpleGraph& g, const VertexSet& w) {
  const auto keep = members(w);
  std::vector<std::size_t> pos(g.order(), SIZE_MAX);
  for (std::size_t t = 0; t < keep.size(); ++t) pos[keep[t]] = t;
  std::vector<VertexSet> rows(keep.size(), VertexSet(keep.size()));
  std::vector<Label> labels;
  labels.reserve(keep.size());
  for (std::size_t t = 0; t < keep.size(); ++t) {
    labels.push_back(g.label(keep[t]));
    for_each_vertex(g.neighbors(keep[t]) & w, [&](std::size_t u) { rows[t].set(pos[u]); });
  }
  return SimpleGraph::from_rows(std::move(rows), std::move(labels));
}

inline bool is_independent(const SimpleGraph& g, const VertexSet& w) {
  for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v)) {
    if (g.neighbors(v).intersects(w)) return false;
  }
  return true;
}

inline bool is_vertex_cover(const SimpleGraph& g, const VertexSet& w) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (w.test(v)) continue;
    if (!g.neighbors(v).is_subset_of(w)) return false;
  }
  return true;
}

/// Searches for two edges whose four endpoints induce exactly those two edges.
inline std::optional<TwoMatching> find_induced_two_matching(const SimpleGraph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = g.neighbors(a).find_next(a); b != VertexSet::npos; b = g.neighbors(a).find_next(b)) {
      VertexSet rest = ~(g.neighbors(a) | g.neighbors(b));
      rest.reset(a);
      rest.reset(b);
      for (auto c = rest.find_first(); c != VertexSet::npos; c = rest.find_next(c)) {
        VertexSet mates = g.neighbors(c) & rest;
        auto d = mates.find_next(c);
        if (d != VertexSet::npos) return TwoMatching{{a, b}, {c, d}};
      }
    }
  }
  return std::nullopt;
}

/// Connected components ordered by smallest member.
inline std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.all_vertices();
  while (unseen.any()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(unseen.find_first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.order());
      for_each_vertex(frontier, [&](std::size_t v) { next |= g.neighbors(v); });
      frontier = next - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

/// Vertices with at least one neighbor.
inline VertexSet non_isolated(const SimpleGraph& g) {
  VertexSet s = g.empty_set();
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).any()) s.set(v);
  }
  return s;
}

}  // namespace cochordal
