#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cochordal/betti.hpp"
#include "cochordal/hochster.hpp"
#include "cochordal/zerodiv.hpp"

namespace cochordal {

enum class OracleKind { none, linear, full };

inline const char* oracle_kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::none: return "none";
    case OracleKind::linear: return "linear";
    case OracleKind::full: return "full";
  }
  return "none";
}

struct CrosscheckOptions {
  OracleConfig oracle;
  bool use_oracle = true;
  /// Betti vectors are compared on degrees 1..max_degree.
  std::uint64_t max_degree = 256;
};

/// Side-by-side Betti data for Gamma(Z_n). The oracle column is ground truth.
struct CrosscheckReport {
  u64 n = 0;
  Factorization factorization;
  FactorShape shape = FactorShape::other;
  bool cochordal = false;
  BigInt edges = 0;
  TypeSequence pipeline_type;
  std::vector<BigInt> pipeline_betti;
  std::optional<std::vector<BigInt>> paper_formula_betti;
  std::optional<std::vector<BigInt>> paper_type_betti;
  std::optional<std::vector<BigInt>> oracle_betti;
  OracleKind oracle_kind = OracleKind::none;
  bool oracle_linear = true;  // full oracle found no off-strand entries
  std::uint64_t pd_pipeline = 0;
  std::optional<BigInt> pd_paper;

  std::optional<bool> agree_formula;
  std::optional<bool> agree_type;
  std::optional<bool> agree_oracle;
  std::optional<bool> agree_pd;
};

/// Entrywise equality after padding with zeros.
inline bool same_vector(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t t = 0; t < len; ++t) {
    const BigInt x = t < a.size() ? a[t] : BigInt(0);
    const BigInt y = t < b.size() ? b[t] : BigInt(0);
    if (x != y) return false;
  }
  return true;
}

inline CrosscheckReport crosscheck(u64 n, const CrosscheckOptions& opts = {}) {
  if (n < 2) throw Error(Errc::out_of_range, "n must be >= 2");
  CrosscheckReport rep;
  rep.n = n;
  rep.factorization = factorize(n);
  rep.shape = factor_shape(rep.factorization).shape;
  const CompressedZdGraph compressed = compressed_zdg(n);
  rep.edges = compressed.edge_count();
  try {
    rep.pipeline_type = extract_type_compressed(compressed);
    rep.cochordal = true;
  } catch (const NotCochordalError&) {
    rep.cochordal = false;
    return rep;
  }
  rep.pipeline_betti = betti_vector(rep.pipeline_type, opts.max_degree);
  rep.pd_pipeline = pd_from_type(rep.pipeline_type);

  try {
    rep.paper_formula_betti = paper_closed_vector(rep.factorization, opts.max_degree);
    rep.pd_paper = paper_pd(rep.factorization);
    rep.paper_type_betti = betti_vector(paper_type_sequence(rep.factorization), opts.max_degree);
  } catch (const Error& e) {
    if (e.code() != Errc::not_applicable) throw;
  }
  if (rep.paper_formula_betti) rep.agree_formula = same_vector(rep.pipeline_betti, *rep.paper_formula_betti);
  if (rep.paper_type_betti) rep.agree_type = same_vector(rep.pipeline_betti, *rep.paper_type_betti);
  if (rep.pd_paper) rep.agree_pd = *rep.pd_paper == rep.pd_pipeline;

  const u64 nv = compressed.vertex_count();
  if (opts.use_oracle && nv <= opts.oracle.linear_max_vertices && nv <= kMaskLimit) {
    const SimpleGraph g = expand(compressed);
    if (nv <= opts.oracle.max_vertices) {
      const BettiTable table = graded_betti_oracle(g, opts.oracle);
      rep.oracle_kind = OracleKind::full;
      rep.oracle_linear = table.is_linear();
      rep.oracle_betti = table.linear_strand();
    } else {
      rep.oracle_kind = OracleKind::linear;
      rep.oracle_betti = linear_strand_oracle(g, opts.oracle);
    }
    auto oracle = *rep.oracle_betti;
    if (oracle.size() > opts.max_degree) oracle.resize(opts.max_degree);
    rep.agree_oracle = rep.oracle_linear && same_vector(rep.pipeline_betti, oracle);
  }
  return rep;
}

}  // namespace cochordal
