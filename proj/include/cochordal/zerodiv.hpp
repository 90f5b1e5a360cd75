#pragma once

// Zero-divisor graphs of Z_n: divisor-class compression, the cochordality
// classification with induced-matching witnesses, type sequences, and the
// printed closed forms for n = p^a, p^a q, pqr.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cochordal/betti.hpp"
#include "cochordal/bigint.hpp"
#include "cochordal/constructible.hpp"
#include "cochordal/error.hpp"
#include "cochordal/graph.hpp"
#include "cochordal/number_theory.hpp"
#include "cochordal/type_sequence.hpp"

namespace cochordal {

inline constexpr std::size_t kDefaultExplicitCap = 5000;

// ---------------------------------------------------------------------------
// Classification

enum class FactorShape { prime_power, prime_power_times_prime, three_primes, other };

/// Shape of n with the roles used by the closed forms: n = p^a, n = p^a q
/// (p carries the exponent; p < q when a = 1), n = pqr with p < q < r.
struct ShapeInfo {
  FactorShape shape = FactorShape::other;
  u64 p = 0;
  u64 q = 0;
  u64 r = 0;
  unsigned a = 0;
};

inline ShapeInfo factor_shape(const Factorization& f) {
  ShapeInfo s;
  const auto& fs = f.factors;
  if (fs.size() == 1) {
    s = {FactorShape::prime_power, fs[0].first, 0, 0, fs[0].second};
  } else if (fs.size() == 2) {
    if (fs[1].second == 1) {
      s = {FactorShape::prime_power_times_prime, fs[0].first, fs[1].first, 0, fs[0].second};
    } else if (fs[0].second == 1) {
      s = {FactorShape::prime_power_times_prime, fs[1].first, fs[0].first, 0, fs[1].second};
    }
  } else if (fs.size() == 3 && fs[0].second == 1 && fs[1].second == 1 && fs[2].second == 1) {
    s = {FactorShape::three_primes, fs[0].first, fs[1].first, fs[2].first, 1};
  }
  return s;
}

inline const char* shape_name(FactorShape s) {
  switch (s) {
    case FactorShape::prime_power: return "p^a";
    case FactorShape::prime_power_times_prime: return "p^a q";
    case FactorShape::three_primes: return "pqr";
    case FactorShape::other: return "other";
  }
  return "other";
}

/// Gamma(Z_n) is cochordal iff n = p^a, p^a q or pqr.
inline bool classify(const Factorization& f) { return factor_shape(f).shape != FactorShape::other; }

/// Residues {x, y} and {u, v} forming an induced 2-matching in Gamma(Z_n).
struct Witness {
  u64 x = 0, y = 0, u = 0, v = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

inline bool verify_two_matching(u64 n, const Witness& w) {
  const u64 vals[] = {w.x, w.y, w.u, w.v};
  for (int s = 0; s < 4; ++s) {
    if (vals[s] == 0 || vals[s] >= n) return false;
    for (int t = 0; t < s; ++t) {
      if (vals[s] == vals[t]) return false;
    }
  }
  auto zero = [n](u64 a, u64 b) { return mulmod(a, b, n) == 0; };
  return zero(w.x, w.y) && zero(w.u, w.v) && !zero(w.x, w.u) && !zero(w.x, w.v) && !zero(w.y, w.u) &&
         !zero(w.y, w.v);
}

/// Induced 2-matching certifying that Gamma(Z_n) is not cochordal.
inline Witness obstruction_witness(const Factorization& f) {
  if (classify(f)) throw Error(Errc::is_cochordal, std::to_string(f.n) + " has a cochordal zero-divisor graph");
  const auto& fs = f.factors;
  auto pk = [](const std::pair<u64, unsigned>& e) { return ipow(e.first, e.second); };
  Witness w;
  if (fs.size() >= 4) {
    // n = p1^a1 p2^a2 p3^a3 p4^a4 m
    const u64 m = f.n / (pk(fs[0]) * pk(fs[1]) * pk(fs[2]) * pk(fs[3]));
    w = {pk(fs[0]) * pk(fs[1]) * m, pk(fs[2]) * pk(fs[3]) * m, pk(fs[0]) * pk(fs[2]) * m,
         pk(fs[1]) * pk(fs[3]) * m};
  } else if (fs.size() == 3) {
    // n = p^a q^b r^c with a > 1
    std::size_t ip = 0;
    while (fs[ip].second == 1) ++ip;
    const auto& [p, a] = fs[ip];
    const auto& eq = fs[(ip + 1) % 3];
    const auto& er = fs[(ip + 2) % 3];
    w = {ipow(p, a), pk(eq) * pk(er), ipow(p, a - 1) * pk(eq), p * pk(er)};
  } else {
    // n = p^a q^b with a, b > 1; w is the least prime divisor of pq - 1
    const auto& [p, a] = fs[0];
    const auto& [q, b] = fs[1];
    const u64 prime_w = factorize(p * q - 1).factors.front().first;
    w = {ipow(p, a), ipow(q, b), ipow(p, a - 1) * ipow(q, b - 1), p * q * prime_w};
  }
  if (!verify_two_matching(f.n, w)) {
    throw std::logic_error("obstruction witness failed verification for n = " + std::to_string(f.n));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Compressed zero-divisor graph

/// Annihilator class of Z_n: residues x with gcd(x, n) = divisor.
struct ZdClass {
  u64 divisor = 0;
  u64 size = 0;       // phi(n / divisor)
  bool loop = false;  // n | divisor^2: the class is a clique
};

struct CompressedZdGraph {
  u64 n = 0;
  std::vector<ZdClass> classes;  // ascending divisor, 1 < d < n

  bool adjacent(std::size_t s, std::size_t t) const {
    return s != t && mulmod(classes[s].divisor, classes[t].divisor, n) == 0;
  }

  u64 vertex_count() const {
    u64 total = 0;
    for (const auto& c : classes) total += c.size;
    return total;
  }

  BigInt edge_count() const {
    BigInt e = 0;
    for (std::size_t s = 0; s < classes.size(); ++s) {
      if (classes[s].loop) e += BigInt(classes[s].size) * (classes[s].size - 1) / 2;
      for (std::size_t t = s + 1; t < classes.size(); ++t) {
        if (adjacent(s, t)) e += BigInt(classes[s].size) * classes[t].size;
      }
    }
    return e;
  }
};

inline CompressedZdGraph compressed_zdg(u64 n) {
  if (n < 2) throw Error(Errc::out_of_range, "n must be >= 2");
  const Factorization f = factorize(n);
  CompressedZdGraph c;
  c.n = n;
  for (u64 d : divisors(f)) {
    if (d == 1 || d == n) continue;
    c.classes.push_back({d, euler_phi(n / d), mulmod(d, d, n) == 0});
  }
  return c;
}

/// Blows each class up into its residues; vertices are ordered by residue.
inline SimpleGraph expand(const CompressedZdGraph& c, std::size_t cap = kDefaultExplicitCap) {
  const u64 total = c.vertex_count();
  if (total > cap) {
    throw Error(Errc::cap_exceeded, std::to_string(total) + " vertices exceed explicit-graph cap " + std::to_string(cap));
  }
  std::vector<std::pair<u64, std::size_t>> residues;  // (residue, class)
  residues.reserve(total);
  for (std::size_t s = 0; s < c.classes.size(); ++s) {
    const u64 d = c.classes[s].divisor;
    const u64 cofactor = c.n / d;
    for (u64 t = 1; t < cofactor; ++t) {
      if (std::gcd(t, cofactor) == 1) residues.emplace_back(d * t, s);
    }
  }
  std::sort(residues.begin(), residues.end());
  const std::size_t nv = residues.size();
  std::vector<VertexSet> members(c.classes.size(), VertexSet(nv));
  std::vector<Label> labels(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    labels[v] = residues[v].first;
    members[residues[v].second].set(v);
  }
  std::vector<VertexSet> reach(c.classes.size(), VertexSet(nv));
  for (std::size_t s = 0; s < c.classes.size(); ++s) {
    if (c.classes[s].loop) reach[s] |= members[s];
    for (std::size_t t = 0; t < c.classes.size(); ++t) {
      if (c.adjacent(s, t)) reach[s] |= members[t];
    }
  }
  std::vector<VertexSet> rows(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    rows[v] = reach[residues[v].second];
    rows[v].reset(v);
  }
  return SimpleGraph::from_rows(std::move(rows), std::move(labels));
}

/// Gamma(Z_n) on the nonzero zero divisors, labeled by residue.
inline SimpleGraph zdg(u64 n, std::size_t cap = kDefaultExplicitCap) {
  if (n < 2) throw Error(Errc::out_of_range, "n must be >= 2");
  if (n > cap) throw Error(Errc::cap_exceeded, "n = " + std::to_string(n) + " exceeds explicit-graph cap");
  return expand(compressed_zdg(n), cap);
}

/// Greedy eligible-vertex peeling carried out on classes. Members of a class
/// are twins, so a class is eligible exactly when its members are; a loop
/// class emits a descending run, any other class a repeated value.
inline TypeSequence extract_type_compressed(const CompressedZdGraph& c) {
  const std::size_t m = c.classes.size();
  if (m > 512 && !classify(factorize(c.n))) {
    throw NotCochordalError("Gamma(Z_" + std::to_string(c.n) + ") is not cochordal");
  }
  std::vector<u64> alive(m);
  for (std::size_t s = 0; s < m; ++s) alive[s] = c.classes[s].size;
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) adj[s][t] = c.adjacent(s, t) ? 1 : 0;
  }
  // A class counts as self-adjacent once it holds two adjacent members.
  auto inner_edge = [&](std::size_t s) { return c.classes[s].loop && alive[s] >= 2; };
  auto has_edge = [&] {
    for (std::size_t s = 0; s < m; ++s) {
      if (alive[s] == 0) continue;
      if (inner_edge(s)) return true;
      for (std::size_t t = s + 1; t < m; ++t) {
        if (alive[t] && adj[s][t]) return true;
      }
    }
    return false;
  };
  auto eligible = [&](std::size_t d) {
    std::vector<std::size_t> outside;  // classes holding non-neighbors of a member of d
    for (std::size_t e = 0; e < m; ++e) {
      if (e != d && alive[e] && !adj[d][e]) outside.push_back(e);
    }
    for (std::size_t s = 0; s < outside.size(); ++s) {
      if (inner_edge(outside[s])) return false;
      for (std::size_t t = s + 1; t < outside.size(); ++t) {
        if (adj[outside[s]][outside[t]]) return false;
      }
    }
    // Remaining twins of a non-loop class are non-neighbors too; they are
    // independent and not adjacent to any class in `outside`.
    return true;
  };
  auto neighborhood = [&](std::size_t d) {
    u64 total = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (alive[e] && adj[d][e]) total += alive[e];
    }
    return total;
  };

  TypeSequence type;
  while (has_edge()) {
    std::size_t pick = m;
    for (std::size_t d = 0; d < m && pick == m; ++d) {
      if (alive[d] && eligible(d)) pick = d;
    }
    if (pick == m) throw NotCochordalError("Gamma(Z_" + std::to_string(c.n) + ") is not cochordal");
    const u64 outside = neighborhood(pick);
    const u64 size = alive[pick];
    if (c.classes[pick].loop) {
      // Member t (0-based) sees outside + (size - 1 - t) neighbors.
      const u64 emitted = outside > 0 ? size : size - 1;
      type.push_descending(outside + size - 1, emitted);
    } else if (outside > 0) {
      type.push_run(outside, size, 0);
    }
    alive[pick] = 0;
  }
  return type;
}

// ---------------------------------------------------------------------------
// Printed type sequences, systems and closed forms

namespace detail {

inline unsigned ceil_half(unsigned a) { return (a + 1) / 2; }

inline Error not_applicable(const Factorization& f, const std::string& why) {
  return Error(Errc::not_applicable, "n = " + std::to_string(f.n) + ": " + why);
}

inline ShapeInfo applicable_shape(const Factorization& f) {
  const ShapeInfo s = factor_shape(f);
  if (s.shape == FactorShape::other) throw not_applicable(f, "not of the form p^a, p^a q, pqr");
  if (s.shape == FactorShape::prime_power && s.a < 2) throw not_applicable(f, "p^a with a < 2");
  return s;
}

/// Residues of the class gcd(x, n) = d, ascending.
inline std::vector<Label> class_members(u64 n, u64 d) {
  std::vector<Label> out;
  const u64 cofactor = n / d;
  for (u64 t = 1; t < cofactor; ++t) {
    if (std::gcd(t, cofactor) == 1) out.push_back(d * t);
  }
  return out;
}

}  // namespace detail

/// The type sequences exactly as stated for p^a (a >= 2), p^a q and pqr.
inline TypeSequence paper_type_sequence(const Factorization& f) {
  const ShapeInfo s = detail::applicable_shape(f);
  const u64 p = s.p, q = s.q, r = s.r;
  const unsigned a = s.a;
  const unsigned half = detail::ceil_half(a);
  auto phi = [&](unsigned i) { return ipow(p, a - i - 1) * (p - 1); };
  TypeSequence t;
  switch (s.shape) {
    case FactorShape::prime_power:
      for (unsigned i = a - 1; i >= half; --i) {
        t.push_descending(ipow(p, i) - ipow(p, a - i - 1) - 1, phi(i));
      }
      break;
    case FactorShape::prime_power_times_prime:
      for (unsigned i = a - 1; i >= half; --i) {
        t.push_descending(q * ipow(p, i) - ipow(p, a - i - 1) - 1, phi(i));
      }
      for (int i = static_cast<int>(half) - 1; i >= 0; --i) {
        const auto ui = static_cast<unsigned>(i);
        t.push_descending((q - 1) * ipow(p, ui) + ipow(p, a - ui - 1) * (p - 1) - 1, phi(ui));
      }
      break;
    case FactorShape::three_primes:
      t.push_descending(q * r + p - 3, p - 1);
      t.push_descending(p * r - p + q - 2, q - 1);
      t.push_descending(r + (p - 1) * (q - 1) - 2, r - 1);
      break;
    case FactorShape::other:
      break;
  }
  return t;
}

/// The explicit constructible systems (v_{i,j}, U_{i,j}) / (v_{i,j}, W_{i,j})
/// as stated, on residues. Needs the explicit class members.
inline ConstructibleSystem paper_system(const Factorization& f, std::size_t cap = kDefaultExplicitCap) {
  const ShapeInfo s = detail::applicable_shape(f);
  if (f.n > cap) throw Error(Errc::cap_exceeded, "n exceeds explicit-graph cap");
  const u64 n = f.n, p = s.p, q = s.q, r = s.r;
  const unsigned a = s.a;
  const unsigned half = detail::ceil_half(a);
  ConstructibleSystem sys;

  // Emits (v_j, base ∪ {v_1..v_{j-1}}) for j = |block|..1.
  auto emit_block = [&](const std::vector<Label>& block, const std::vector<Label>& base) {
    for (std::size_t j = block.size(); j >= 1; --j) {
      SystemStep step{block[j - 1], base};
      step.cover.insert(step.cover.end(), block.begin(), block.begin() + static_cast<long>(j - 1));
      std::sort(step.cover.begin(), step.cover.end());
      sys.steps.push_back(std::move(step));
    }
  };
  auto unite = [](std::vector<Label>& into, const std::vector<Label>& more) {
    into.insert(into.end(), more.begin(), more.end());
  };

  switch (s.shape) {
    case FactorShape::prime_power:
      for (unsigned i = a - 1; i >= half; --i) {
        std::vector<Label> base;
        for (unsigned t = a - i; t + 1 <= i; ++t) unite(base, detail::class_members(n, ipow(p, t)));
        emit_block(detail::class_members(n, ipow(p, i)), base);
      }
      break;
    case FactorShape::prime_power_times_prime:
      for (int i = static_cast<int>(a) - 1; i >= 0; --i) {
        const auto ui = static_cast<unsigned>(i);
        std::vector<Label> base;
        for (unsigned t = a - ui; t <= a; ++t) unite(base, detail::class_members(n, ipow(p, t)));
        for (unsigned t = a - ui; t + 1 <= ui; ++t) unite(base, detail::class_members(n, ipow(p, t) * q));
        emit_block(detail::class_members(n, ipow(p, ui) * q), base);
      }
      break;
    case FactorShape::three_primes: {
      std::vector<Label> w3 = detail::class_members(n, p * q);
      unite(w3, detail::class_members(n, p * r));
      unite(w3, detail::class_members(n, p));
      emit_block(detail::class_members(n, q * r), w3);
      std::vector<Label> w2 = detail::class_members(n, p * q);
      unite(w2, detail::class_members(n, q));
      emit_block(detail::class_members(n, p * r), w2);
      emit_block(detail::class_members(n, p * q), detail::class_members(n, r));
      break;
    }
    case FactorShape::other:
      break;
  }
  return sys;
}

namespace detail {

/// (coefficient, top argument) pairs of the printed closed form.
inline std::vector<std::pair<BigInt, BigInt>> closed_form_terms(const Factorization& f) {
  const ShapeInfo s = applicable_shape(f);
  const BigInt p = s.p, q = s.q, r = s.r;
  const unsigned a = s.a;
  const unsigned half = ceil_half(a);
  auto pw = [](const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); };
  std::vector<std::pair<BigInt, BigInt>> terms;
  switch (s.shape) {
    case FactorShape::prime_power:
      for (unsigned j = half; j <= a - 1; ++j) terms.emplace_back(pw(p, a - j - 1) * (p - 1), pw(p, j) - 2);
      break;
    case FactorShape::prime_power_times_prime:
      for (unsigned j = half; j + 1 <= a; ++j) terms.emplace_back(pw(p, a - j - 1) * (p - 1), q * pw(p, j) - 2);
      for (unsigned j = 0; j + 1 <= half; ++j) {
        terms.emplace_back(pw(p, a - j - 1) * (p - 1), (q - 1) * pw(p, j) + pw(p, a - j) - 2);
      }
      break;
    case FactorShape::three_primes:
      terms.emplace_back(p - 1, q * r + p - 3);
      terms.emplace_back(q - 1, p * r + q - 3);
      terms.emplace_back(r - 1, p * q + r - 3);
      break;
    case FactorShape::other:
      break;
  }
  return terms;
}

}  // namespace detail

/// The printed closed form for beta_i(S/I(Gamma(Z_n))), evaluated verbatim.
inline BigInt paper_closed_betti(const Factorization& f, std::uint64_t i) {
  if (i == 0) throw Error(Errc::out_of_range, "homological degree must be >= 1");
  BigInt total = 0;
  for (const auto& [coef, top] : detail::closed_form_terms(f)) total += coef * binomial(top, BigInt(i));
  return total;
}

/// Printed closed form for i = 1, 2, ... up to its last nonzero value.
inline std::vector<BigInt> paper_closed_vector(const Factorization& f,
                                               std::optional<std::uint64_t> max_degree = std::nullopt) {
  BigInt bound = 0;
  for (const auto& [coef, top] : detail::closed_form_terms(f)) bound = std::max(bound, top);
  std::uint64_t len = static_cast<std::uint64_t>(bound);
  if (max_degree) len = std::min(len, *max_degree);
  std::vector<BigInt> out;
  for (std::uint64_t i = 1; i <= len; ++i) out.push_back(paper_closed_betti(f, i));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// The printed projective dimension.
inline BigInt paper_pd(const Factorization& f) {
  const ShapeInfo s = detail::applicable_shape(f);
  const BigInt p = s.p, q = s.q, r = s.r;
  switch (s.shape) {
    case FactorShape::prime_power:
      return boost::multiprecision::pow(p, s.a - 1) - 2;
    case FactorShape::prime_power_times_prime:
      return s.a >= 2 ? BigInt(q * boost::multiprecision::pow(p, s.a - 1) - 2) : BigInt(q + p - 3);
    case FactorShape::three_primes:
      return q * r + p - 3;
    case FactorShape::other:
      break;
  }
  throw detail::not_applicable(f, "no printed projective dimension");
}

}  // namespace cochordal
