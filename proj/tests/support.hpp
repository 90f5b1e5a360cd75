#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <bit>
#include <memory>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cochordal/cochordal.hpp"

namespace cochordal::testing {

inline SimpleGraph graph_from_mask(std::size_t n, std::uint64_t edge_mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if (edge_mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, edges);
}

/// Calls f on every labeled graph with n vertices.
template <typename F>
void for_each_graph(std::size_t n, F&& f) {
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) f(graph_from_mask(n, m));
}

inline SimpleGraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return SimpleGraph(n, e);
}

inline SimpleGraph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return SimpleGraph(n, e);
}

inline SimpleGraph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return SimpleGraph(n, e);
}

inline SimpleGraph edgeless(std::size_t n) { return SimpleGraph(n, std::span<const Edge>{}); }

inline SimpleGraph two_k2() { return SimpleGraph(4, {{0, 1}, {2, 3}}); }

inline VertexSet set_of(std::size_t n, std::initializer_list<std::size_t> vs) {
  VertexSet s(n);
  for (auto v : vs) s.set(v);
  return s;
}

/// Brute force: some vertex subset of size >= 4 induces a cycle.
inline bool has_chordless_cycle(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) < 4) continue;
    bool all_degree_two = true;
    for (std::uint64_t rest = m; rest && all_degree_two; rest &= rest - 1) {
      all_degree_two = std::popcount(adj[std::countr_zero(rest)] & m) == 2;
    }
    if (!all_degree_two) continue;
    // 2-regular and connected means a single cycle
    std::uint64_t seen = m & (~m + 1), frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest; rest &= rest - 1) next |= adj[std::countr_zero(rest)] & m;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == m) return true;
  }
  return false;
}

/// Gamma(Z_n) by scanning all products; labels are residues.
inline SimpleGraph zdg_by_products(std::uint64_t n) {
  std::vector<Label> labels;
  for (std::uint64_t x = 1; x < n; ++x) {
    for (std::uint64_t y = 1; y < n; ++y) {
      if (x * y % n == 0) {
        labels.push_back(x);
        break;
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    for (std::size_t t = s + 1; t < labels.size(); ++t) {
      if (labels[s] * labels[t] % n == 0) edges.emplace_back(s, t);
    }
  }
  return SimpleGraph(labels.size(), edges, labels);
}

/// Random chordal graph: each new vertex joins a random clique of the
/// graph built so far, so it is simplicial when added.
inline SimpleGraph random_chordal(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    const std::size_t x = pick(rng);
    std::vector<std::size_t> clique;
    if (coin(rng) || coin(rng)) clique.push_back(x);
    std::vector<std::size_t> order(v);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (auto y : order) {
      if (clique.empty() || y == x || !coin(rng)) continue;
      bool ok = true;
      for (auto z : clique) ok = ok && adj[y][z];
      if (ok) clique.push_back(y);
    }
    for (auto y : clique) adj[v][y] = adj[y][v] = 1;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(perm[u], perm[v]);
    }
  }
  return SimpleGraph(n, edges);
}

inline SimpleGraph random_cochordal(std::size_t n, std::mt19937_64& rng) {
  return complement(random_chordal(n, rng));
}

inline SimpleGraph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, edges);
}

inline TypeSequence random_type(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_value,
                                std::uint64_t min_value = 0) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::uint64_t> val(min_value, max_value);
  TypeSequence t;
  const std::size_t k = len(rng);
  for (std::size_t s = 0; s < k; ++s) t.push_back(val(rng));
  return t;
}

// C(n, k) from Legendre's formula: product of p^{v_p(n!) - v_p(k!) - v_p((n-k)!)}.
inline BigInt binomial_by_legendre(std::uint64_t n, std::uint64_t k) {
  std::vector<char> composite(n + 1, 0);
  BigInt result = 1;
  auto v = [](std::uint64_t m, std::uint64_t p) {
    std::uint64_t e = 0;
    for (std::uint64_t q = p; q <= m; q *= p) e += m / q;
    return e;
  };
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = 1;
    const std::uint64_t e = v(n, p) - v(k, p) - v(n - k, p);
    for (std::uint64_t t = 0; t < e; ++t) result *= p;
  }
  return result;
}

/// Five ways to pick among eligible vertices: lowest index, highest index,
/// most live neighbors, fewest live neighbors, seeded random.
inline std::vector<EligiblePolicy> tie_break_policies(std::uint64_t seed = 77) {
  std::vector<EligiblePolicy> policies;
  policies.push_back([](const SimpleGraph&, const VertexSet&, const VertexSet& el) { return el.find_first(); });
  policies.push_back([](const SimpleGraph&, const VertexSet&, const VertexSet& el) {
    std::size_t last = el.find_first();
    for (auto v = el.find_next(last); v != VertexSet::npos; v = el.find_next(v)) last = v;
    return last;
  });
  auto live_degree = [](const SimpleGraph& g, const VertexSet& alive, std::size_t v) {
    return (g.neighbors(v) & alive).count();
  };
  policies.push_back([live_degree](const SimpleGraph& g, const VertexSet& alive, const VertexSet& el) {
    std::size_t best = el.find_first();
    for_each_vertex(el, [&](std::size_t v) {
      if (live_degree(g, alive, v) > live_degree(g, alive, best)) best = v;
    });
    return best;
  });
  policies.push_back([live_degree](const SimpleGraph& g, const VertexSet& alive, const VertexSet& el) {
    std::size_t best = el.find_first();
    for_each_vertex(el, [&](std::size_t v) {
      if (live_degree(g, alive, v) < live_degree(g, alive, best)) best = v;
    });
    return best;
  });
  auto rng = std::make_shared<std::mt19937_64>(seed);
  policies.push_back([rng](const SimpleGraph&, const VertexSet&, const VertexSet& el) {
    const auto all = members(el);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(*rng)];
  });
  return policies;
}

/// Pipeline table: extraction, type, closed form.
inline BettiTable pipeline_table(const SimpleGraph& g) { return table_from_type(type_of(extract_system(g))); }

inline std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace cochordal::testing
