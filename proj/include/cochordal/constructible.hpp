#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cochordal/chordality.hpp"
#include "cochordal/error.hpp"
#include "cochordal/graph.hpp"
#include "cochordal/type_sequence.hpp"

namespace cochordal {

/// One star K_{u,U} of a constructible system, by vertex label.
struct SystemStep {
  Label u = 0;
  std::vector<Label> cover;  // ascending

  friend bool operator==(const SystemStep&, const SystemStep&) = default;
};

/// Ordered steps ((u_k, U_k), ..., (u_1, U_1)), highest index first.
struct ConstructibleSystem {
  std::vector<SystemStep> steps;

  std::size_t size() const noexcept { return steps.size(); }
  /// Step with 1-based index j (j = 1 is the last element).
  const SystemStep& step(std::size_t j) const { return steps[steps.size() - j]; }

  friend bool operator==(const ConstructibleSystem&, const ConstructibleSystem&) = default;
};

/// Chooses one vertex from the nonempty eligible set of G[alive].
using EligiblePolicy =
    std::function<std::size_t(const SimpleGraph& g, const VertexSet& alive, const VertexSet& eligible)>;

namespace detail {

inline bool has_edge(const SimpleGraph& g, const VertexSet& alive) {
  for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
    if (g.neighbors(v).intersects(alive)) return true;
  }
  return false;
}

inline std::vector<Label> labels_of(const SimpleGraph& g, const VertexSet& s) {
  std::vector<Label> out;
  for_each_vertex(s, [&](std::size_t v) { out.push_back(g.label(v)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t first_eligible(const SimpleGraph& g, const VertexSet& alive) {
  for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
    if (is_eligible(g, v, alive)) return v;
  }
  return VertexSet::npos;
}

}  // namespace detail

/// Peels eligible vertices: records (u, N(u)) in the current graph, deletes u,
/// and stops once no edges remain. Isolated vertices never appear. With no
/// policy the smallest eligible index is taken.
inline ConstructibleSystem extract_system(const SimpleGraph& g, const EligiblePolicy& policy = {}) {
  ConstructibleSystem sys;
  VertexSet alive = g.all_vertices();
  while (detail::has_edge(g, alive)) {
    std::size_t u = VertexSet::npos;
    if (policy) {
      const VertexSet eligible = eligible_vertices(g, alive);
      if (eligible.any()) u = policy(g, alive, eligible);
      if (u != VertexSet::npos && !eligible.test(u)) {
        throw Error(Errc::index_out_of_range, "policy chose a non-eligible vertex");
      }
    } else {
      u = detail::first_eligible(g, alive);
    }
    if (u == VertexSet::npos) {
      std::optional<TwoMatching> witness;
      if (auto m = find_induced_two_matching(induced(g, alive))) {
        const auto keep = members(alive);
        witness = TwoMatching{{keep[m->first.first], keep[m->first.second]},
                              {keep[m->second.first], keep[m->second.second]}};
      }
      throw NotCochordalError("no eligible vertex in a graph with edges", witness);
    }
    sys.steps.push_back({g.label(u), detail::labels_of(g, g.neighbors(u) & alive)});
    alive.reset(u);
  }
  return sys;
}

inline TypeSequence type_of(const ConstructibleSystem& p) {
  TypeSequence t;
  for (const auto& s : p.steps) t.push_back(s.cover.size());
  return t;
}

/// Union of the stars K_{u_j, U_j}. Vertices are all mentioned labels, ascending.
inline SimpleGraph rebuild_graph(const ConstructibleSystem& p) {
  std::vector<Label> labels;
  for (const auto& s : p.steps) {
    labels.push_back(s.u);
    labels.insert(labels.end(), s.cover.begin(), s.cover.end());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index = [&](Label l) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Edge> edges;
  for (const auto& s : p.steps) {
    for (Label w : s.cover) {
      if (w == s.u) throw Error(Errc::self_loop, "u_j belongs to U_j for label " + std::to_string(w));
      edges.emplace_back(index(s.u), index(w));
    }
  }
  return SimpleGraph(labels.size(), edges, labels);
}

struct ValidationReport {
  bool distinct_centers = true;  // u_i pairwise distinct
  bool centers_outside = true;   // u_i not in U_j for j <= i
  bool covers = true;            // U_j covers G_{j-1} for j >= 2
  bool rebuilds = true;          // edges of the union equal E(G)
  std::vector<std::string> messages;

  bool ok() const { return distinct_centers && centers_outside && covers && rebuilds; }
  /// Passes with repeated centers allowed.
  bool ok_relaxed() const { return centers_outside && covers && rebuilds; }
};

inline ValidationReport validate_system(const ConstructibleSystem& p, const SimpleGraph& g) {
  auto index_of = [&](Label l) {
    auto idx = g.index_of(l);
    if (!idx) throw Error(Errc::unknown_vertex, "label " + std::to_string(l));
    return *idx;
  };
  const std::size_t k = p.size();
  // j-th step as index sets, j = 1..k
  std::vector<std::size_t> center(k + 1);
  std::vector<VertexSet> cover(k + 1, g.empty_set());
  for (std::size_t j = 1; j <= k; ++j) {
    center[j] = index_of(p.step(j).u);
    for (Label l : p.step(j).cover) cover[j].set(index_of(l));
  }

  ValidationReport r;
  std::set<std::size_t> seen;
  for (std::size_t j = 1; j <= k; ++j) {
    if (!seen.insert(center[j]).second) {
      r.distinct_centers = false;
      r.messages.push_back("repeated center " + std::to_string(g.label(center[j])));
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      if (cover[j].test(center[i])) {
        r.centers_outside = false;
        r.messages.push_back("u_" + std::to_string(i) + " = " + std::to_string(g.label(center[i])) +
                             " lies in U_" + std::to_string(j));
      }
    }
  }

  // Build G_1, G_2, ... incrementally and check the cover condition.
  std::vector<VertexSet> built(g.order(), g.empty_set());
  for (std::size_t j = 1; j <= k; ++j) {
    if (j >= 2) {
      for (std::size_t v = 0; v < g.order(); ++v) {
        if (!cover[j].test(v) && !built[v].is_subset_of(cover[j])) {
          r.covers = false;
          r.messages.push_back("U_" + std::to_string(j) + " misses an edge of G_" + std::to_string(j - 1) +
                               " at vertex " + std::to_string(g.label(v)));
          break;
        }
      }
    }
    const std::size_t u = center[j];
    VertexSet star = cover[j];
    star.reset(u);
    built[u] |= star;
    for_each_vertex(star, [&](std::size_t w) { built[w].set(u); });
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (built[v] != g.neighbors(v)) {
      r.rebuilds = false;
      const VertexSet extra = built[v] - g.neighbors(v);
      const VertexSet missing = g.neighbors(v) - built[v];
      if (extra.any()) {
        r.messages.push_back("extra edge {" + std::to_string(g.label(v)) + "," +
                             std::to_string(g.label(extra.find_first())) + "}");
      }
      if (missing.any()) {
        r.messages.push_back("missing edge {" + std::to_string(g.label(v)) + "," +
                             std::to_string(g.label(missing.find_first())) + "}");
      }
      break;
    }
  }
  return r;
}

}  // namespace cochordal
