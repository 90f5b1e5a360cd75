#pragma once

// Graded Betti numbers of edge ideals by Hochster's formula:
//   beta_{i,j}(S/I(G)) = sum over |W| = j of dim H~_{j-i-1}(Ind(G[W]); GF(p)),
// where Ind is the independence complex. Everything here runs on 32-bit
// vertex masks and is independent of the type-sequence machinery.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cochordal/betti.hpp"
#include "cochordal/error.hpp"
#include "cochordal/graph.hpp"

namespace cochordal {

struct OracleConfig {
  std::size_t max_vertices = 14;
  std::size_t linear_max_vertices = 24;
  std::uint32_t characteristic = 2;
  unsigned workers = 1;

  /// Reads ORACLE_MAX_VERTICES, ORACLE_LINEAR_MAX_VERTICES, ORACLE_CHAR and WORKERS.
  static OracleConfig from_env() {
    OracleConfig c;
    auto read = [](const char* name, auto& field) {
      if (const char* s = std::getenv(name)) {
        try {
          field = static_cast<std::remove_reference_t<decltype(field)>>(std::stoull(s));
        } catch (const std::exception&) {
          throw Error(Errc::out_of_range, std::string("bad value for ") + name);
        }
      }
    };
    read("ORACLE_MAX_VERTICES", c.max_vertices);
    read("ORACLE_LINEAR_MAX_VERTICES", c.linear_max_vertices);
    read("ORACLE_CHAR", c.characteristic);
    read("WORKERS", c.workers);
    return c;
  }
};

/// dim H~_d for d = -1, 0, 1, ...; ranks[0] is the d = -1 entry.
struct HomologyRanks {
  std::vector<std::uint64_t> ranks;

  std::uint64_t at(int d) const {
    const auto idx = static_cast<std::size_t>(d + 1);
    return idx < ranks.size() ? ranks[idx] : 0;
  }
  friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;
};

inline constexpr std::size_t kMaskLimit = 30;

namespace detail {

using Mask = std::uint32_t;

inline bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::vector<Mask> adjacency_masks(const SimpleGraph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    for_each_vertex(g.neighbors(v), [&](std::size_t u) { adj[v] |= Mask{1} << u; });
  }
  return adj;
}

struct Face {
  Mask vertices;
  Mask extensions;  // vertices above max(vertices) independent of all of them
};

/// Rank over GF(2) of the boundary map from `faces` to `lower` (sorted masks).
inline std::uint64_t boundary_rank_gf2(const std::vector<Face>& faces, const std::vector<Mask>& lower) {
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(lower.size());
  std::uint64_t rank = 0;
  std::vector<std::uint64_t> row(words);
  for (const auto& f : faces) {
    std::fill(row.begin(), row.end(), 0);
    for (Mask rest = f.vertices; rest; rest &= rest - 1) {
      const Mask facet = f.vertices & ~(rest & (~rest + 1));
      const auto col = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), facet) - lower.begin());
      row[col / 64] |= std::uint64_t{1} << (col % 64);
    }
    for (;;) {
      std::size_t w = 0;
      while (w < words && row[w] == 0) ++w;
      if (w == words) break;
      const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      auto& piv = pivots[col];
      if (piv.empty()) {
        piv = row;
        ++rank;
        break;
      }
      for (std::size_t t = w; t < words; ++t) row[t] ^= piv[t];
    }
  }
  return rank;
}

/// Rank over GF(p), p odd, with signed boundary coefficients.
inline std::uint64_t boundary_rank_gfp(const std::vector<Face>& faces, const std::vector<Mask>& lower,
                                       std::uint32_t p) {
  const std::size_t cols = lower.size();
  std::vector<std::vector<std::uint32_t>> pivots(cols);
  std::uint64_t rank = 0;
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  std::vector<std::uint32_t> row(cols);
  for (const auto& f : faces) {
    std::fill(row.begin(), row.end(), 0);
    int position = 0;
    for (Mask rest = f.vertices; rest; rest &= rest - 1, ++position) {
      const Mask facet = f.vertices & ~(rest & (~rest + 1));
      const auto col = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), facet) - lower.begin());
      row[col] = (position % 2 == 0) ? 1 : p - 1;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == 0) continue;
      auto& piv = pivots[c];
      if (piv.empty()) {
        const std::uint64_t inv = inverse(row[c]);
        for (std::size_t t = c; t < cols; ++t) row[t] = static_cast<std::uint32_t>(row[t] * inv % p);
        piv = row;
        ++rank;
        break;
      }
      const std::uint64_t factor = row[c];
      for (std::size_t t = c; t < cols; ++t) {
        row[t] = static_cast<std::uint32_t>((row[t] + (p - factor) * piv[t]) % p);
      }
    }
  }
  return rank;
}

struct ComplexStats {
  HomologyRanks homology;
  std::vector<std::uint64_t> face_counts;  // index d + 1
};

/// Reduced homology of Ind(G[w]) streaming faces one dimension at a time.
inline ComplexStats independence_homology(const std::vector<Mask>& adj, Mask w, std::uint32_t p) {
  ComplexStats out;
  std::vector<Face> lower{{0, w}};
  std::vector<Mask> lower_sorted{0};
  out.face_counts.push_back(1);
  std::vector<std::uint64_t> rank{0};  // rank of boundary out of dimension d, index d + 1
  for (;;) {
    std::vector<Face> upper;
    for (const auto& f : lower) {
      for (Mask ext = f.extensions; ext; ext &= ext - 1) {
        const int v = std::countr_zero(ext);
        const Mask bit = Mask{1} << v;
        const Mask above = ~((bit << 1) - 1);
        upper.push_back({f.vertices | bit, f.extensions & ~adj[v] & above});
      }
    }
    if (upper.empty()) break;
    rank.push_back(p == 2 ? boundary_rank_gf2(upper, lower_sorted) : boundary_rank_gfp(upper, lower_sorted, p));
    out.face_counts.push_back(upper.size());
    lower = std::move(upper);
    lower_sorted.clear();
    for (const auto& f : lower) lower_sorted.push_back(f.vertices);
    std::sort(lower_sorted.begin(), lower_sorted.end());
  }
  rank.push_back(0);
  const std::size_t dims = out.face_counts.size();
  out.homology.ranks.resize(dims);
  for (std::size_t t = 0; t < dims; ++t) {
    out.homology.ranks[t] = out.face_counts[t] - rank[t] - rank[t + 1];
  }

  // Reduced Euler characteristic from faces and from homology must agree.
  long long chi_faces = 0;
  long long chi_homology = 0;
  for (std::size_t t = 0; t < dims; ++t) {
    const long long sign = (t % 2 == 0) ? -1 : 1;
    chi_faces += sign * static_cast<long long>(out.face_counts[t]);
    chi_homology += sign * static_cast<long long>(out.homology.ranks[t]);
  }
  if (chi_faces != chi_homology) throw std::logic_error("Euler characteristic mismatch");
  return out;
}

inline void check_characteristic(std::uint32_t p) {
  if (!is_small_prime(p)) {
    throw Error(Errc::non_prime_characteristic, std::to_string(p) + " is not prime");
  }
}

template <typename Accumulate, typename Init>
auto parallel_over_masks(std::size_t n, unsigned workers, Init init, Accumulate acc) {
  const std::uint64_t total = std::uint64_t{1} << n;
  workers = std::max(1u, workers);
  using Local = decltype(init());
  std::vector<Local> locals(workers, init());
  auto run = [&](unsigned id) {
    const std::uint64_t lo = total * id / workers;
    const std::uint64_t hi = total * (id + 1) / workers;
    for (std::uint64_t m = lo; m < hi; ++m) acc(locals[id], static_cast<Mask>(m));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  return locals;
}

}  // namespace detail

/// Reduced homology ranks of Ind(G[W]) over GF(p).
inline HomologyRanks homology_ranks(const SimpleGraph& g, const VertexSet& w, std::uint32_t p = 2,
                                    std::size_t cap = 14) {
  detail::check_characteristic(p);
  if (w.count() > cap || w.count() > kMaskLimit) {
    throw Error(Errc::cap_exceeded, "subset of size " + std::to_string(w.count()));
  }
  const SimpleGraph sub = induced(g, w);
  const detail::Mask all = sub.order() == 0 ? 0 : static_cast<detail::Mask>((std::uint64_t{1} << sub.order()) - 1);
  return detail::independence_homology(detail::adjacency_masks(sub), all, p).homology;
}

/// Face counts per dimension (index d + 1) of Ind(G[W]).
inline std::vector<std::uint64_t> independence_face_counts(const SimpleGraph& g, const VertexSet& w) {
  if (w.count() > kMaskLimit) throw Error(Errc::cap_exceeded, "subset too large");
  const SimpleGraph sub = induced(g, w);
  const detail::Mask all = sub.order() == 0 ? 0 : static_cast<detail::Mask>((std::uint64_t{1} << sub.order()) - 1);
  return detail::independence_homology(detail::adjacency_masks(sub), all, 2).face_counts;
}

/// Full graded Betti table of S/I(G) over GF(p), including beta_{0,0} = 1.
inline BettiTable graded_betti_oracle(const SimpleGraph& g, const OracleConfig& cfg = {}) {
  using detail::Mask;
  detail::check_characteristic(cfg.characteristic);
  const std::size_t n = g.order();
  if (n > cfg.max_vertices || n > kMaskLimit) {
    throw Error(Errc::cap_exceeded, "graph order " + std::to_string(n) + " exceeds oracle cap " +
                                        std::to_string(std::min(cfg.max_vertices, kMaskLimit)));
  }
  const auto adj = detail::adjacency_masks(g);
  using Counts = std::map<BettiTable::Key, std::uint64_t>;
  auto locals = detail::parallel_over_masks(
      n, cfg.workers, [] { return Counts{}; },
      [&](Counts& acc, Mask w) {
        // A vertex isolated in G[W] is a cone point of Ind(G[W]).
        for (Mask rest = w; rest; rest &= rest - 1) {
          if ((adj[std::countr_zero(rest)] & w) == 0) return;
        }
        const auto stats = detail::independence_homology(adj, w, cfg.characteristic);
        const auto j = static_cast<std::uint64_t>(std::popcount(w));
        for (std::size_t t = 0; t < stats.homology.ranks.size(); ++t) {
          const std::uint64_t rank = stats.homology.ranks[t];
          if (rank == 0) continue;
          // t = d + 1 and i = j - d - 1 = j - t
          acc[{j - t, j}] += rank;
        }
      });
  BettiTable table;
  for (const auto& local : locals) {
    for (const auto& [key, count] : local) table.add(key.first, key.second, count);
  }
  return table;
}

/// (beta_{1,2}, beta_{2,3}, ...) from component counts: dim H~_0(Ind(G[W]))
/// is one less than the number of components of the complement on W.
inline std::vector<BigInt> linear_strand_oracle(const SimpleGraph& g, const OracleConfig& cfg = {}) {
  using detail::Mask;
  const std::size_t n = g.order();
  if (n > cfg.linear_max_vertices || n > kMaskLimit) {
    throw Error(Errc::cap_exceeded, "graph order " + std::to_string(n) + " exceeds linear-strand cap " +
                                        std::to_string(std::min(cfg.linear_max_vertices, kMaskLimit)));
  }
  const auto adj = detail::adjacency_masks(g);
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  std::vector<Mask> co(n);
  for (std::size_t v = 0; v < n; ++v) co[v] = full & ~adj[v] & ~(Mask{1} << v);

  auto locals = detail::parallel_over_masks(
      n, cfg.workers, [n] { return std::vector<std::uint64_t>(n + 1, 0); },
      [&](std::vector<std::uint64_t>& acc, Mask w) {
        if (w == 0) return;
        std::uint64_t components = 0;
        Mask rest = w;
        while (rest) {
          Mask reach = rest & (~rest + 1);
          Mask frontier = reach;
          while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const Mask fresh = co[v] & rest & ~reach;
            reach |= fresh;
            frontier |= fresh;
          }
          rest &= ~reach;
          ++components;
        }
        acc[std::popcount(w) - 1] += components - 1;
      });
  std::vector<BigInt> out(n > 0 ? n - 1 : 0, 0);
  for (const auto& local : locals) {
    for (std::size_t i = 1; i < n; ++i) out[i - 1] += local[i];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// True iff the oracle table of S/I(G) is concentrated on j = i + 1 for i >= 1.
inline bool is_linear_resolution(const SimpleGraph& g, const OracleConfig& cfg = {}) {
  return graded_betti_oracle(g, cfg).is_linear();
}

}  // namespace cochordal
