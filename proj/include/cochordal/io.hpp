#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cochordal/betti.hpp"
#include "cochordal/constructible.hpp"
#include "cochordal/crosscheck.hpp"
#include "cochordal/error.hpp"
#include "cochordal/graph.hpp"

namespace cochordal {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Edge-list text format: "u v" per line, '#' comments, blank lines skipped.
// Labels are mapped to dense indices in ascending label order.

inline SimpleGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    const auto start = view.find_first_not_of(" \t\r");
    if (start == std::string_view::npos || view[start] == '#') continue;
    view.remove_prefix(start);
    std::vector<std::string_view> tokens;
    while (!view.empty()) {
      const auto cut = view.find_first_of(" \t\r");
      tokens.push_back(view.substr(0, cut));
      if (cut == std::string_view::npos) break;
      view.remove_prefix(cut);
      const auto next = view.find_first_not_of(" \t\r");
      if (next == std::string_view::npos) break;
      view.remove_prefix(next);
    }
    if (tokens.size() != 2) throw ParseError(lineno, "expected two labels, got " + std::to_string(tokens.size()));
    Label ends[2];
    for (int t = 0; t < 2; ++t) {
      const auto* first = tokens[t].data();
      const auto* last = first + tokens[t].size();
      auto [ptr, ec] = std::from_chars(first, last, ends[t]);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError(lineno, "not a nonnegative integer: '" + std::string(tokens[t]) + "'");
      }
    }
    if (ends[0] == ends[1]) throw ParseError(lineno, "self-loop at label " + std::to_string(ends[0]));
    raw.emplace_back(ends[0], ends[1]);
  }
  std::vector<Label> labels;
  for (const auto& [u, v] : raw) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index = [&](Label l) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(index(u), index(v));
  return SimpleGraph(labels.size(), edges, labels);
}

inline SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline SimpleGraph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  return parse_edge_list(in);
}

inline std::string write_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  for (const auto& [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON

/// [{"u": label, "U": [labels]}, ...], highest index first.
inline Json system_to_json(const ConstructibleSystem& p) {
  Json arr = Json::array();
  for (const auto& s : p.steps) arr.push_back({{"u", s.u}, {"U", s.cover}});
  return arr;
}

inline ConstructibleSystem system_from_json(const Json& j) {
  ConstructibleSystem p;
  for (const auto& item : j) {
    SystemStep s{item.at("u").get<Label>(), item.at("U").get<std::vector<Label>>()};
    std::sort(s.cover.begin(), s.cover.end());
    p.steps.push_back(std::move(s));
  }
  return p;
}

/// {"module": "S/I", "entries": [{"i":..,"j":..,"beta":"..."}]}. The ideal-indexed
/// form shifts i down by one and drops beta_{0,0}.
inline Json betti_to_json(const BettiTable& b, bool ideal_indexed = false) {
  Json entries = Json::array();
  for (const auto& [k, v] : b.entries()) {
    if (ideal_indexed && k.first == 0) continue;
    const std::uint64_t i = ideal_indexed ? k.first - 1 : k.first;
    entries.push_back({{"i", i}, {"j", k.second}, {"beta", to_decimal(v)}});
  }
  return {{"module", ideal_indexed ? "I" : "S/I"}, {"entries", entries}};
}

inline BettiTable betti_from_json(const Json& j) {
  BettiTable b;
  const bool ideal = j.at("module").get<std::string>() == "I";
  for (const auto& e : j.at("entries")) {
    const auto i = e.at("i").get<std::uint64_t>() + (ideal ? 1 : 0);
    b.set(i, e.at("j").get<std::uint64_t>(), BigInt(e.at("beta").get<std::string>()));
  }
  if (ideal) b.set(0, 0, 1);
  return b;
}

inline Json vector_to_json(const std::vector<BigInt>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_decimal(x));
  return arr;
}

inline std::string vector_to_string(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) s += ',';
    s += to_decimal(v[t]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Crosscheck rows

inline const std::vector<std::string>& crosscheck_columns() {
  static const std::vector<std::string> cols = {
      "n",           "factor_shape",   "cochordal",    "edges",        "pd_pipeline",
      "pd_paper",    "beta1_pipeline", "beta1_paper_formula", "beta1_paper_type", "oracle_checked",
      "agree_formula", "agree_type",   "agree_oracle", "agree_pd"};
  return cols;
}

namespace detail {

inline std::string flag(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

inline std::string first_or_empty(const std::optional<std::vector<BigInt>>& v) {
  if (!v) return "";
  return v->empty() ? "0" : to_decimal(v->front());
}

}  // namespace detail

inline std::vector<std::string> crosscheck_row(const CrosscheckReport& r) {
  return {std::to_string(r.n),
          shape_name(r.shape),
          r.cochordal ? "true" : "false",
          to_decimal(r.edges),
          std::to_string(r.pd_pipeline),
          r.pd_paper ? to_decimal(*r.pd_paper) : "",
          r.pipeline_betti.empty() ? "0" : to_decimal(r.pipeline_betti.front()),
          detail::first_or_empty(r.paper_formula_betti),
          detail::first_or_empty(r.paper_type_betti),
          oracle_kind_name(r.oracle_kind),
          detail::flag(r.agree_formula),
          detail::flag(r.agree_type),
          detail::flag(r.agree_oracle),
          detail::flag(r.agree_pd)};
}

inline std::string crosscheck_csv(const std::vector<CrosscheckReport>& rows) {
  std::ostringstream os;
  const auto& cols = crosscheck_columns();
  for (std::size_t t = 0; t < cols.size(); ++t) os << (t ? "," : "") << cols[t];
  os << '\n';
  for (const auto& r : rows) {
    const auto cells = crosscheck_row(r);
    for (std::size_t t = 0; t < cells.size(); ++t) os << (t ? "," : "") << cells[t];
    os << '\n';
  }
  return os.str();
}

inline Json crosscheck_json(const std::vector<CrosscheckReport>& rows) {
  Json arr = Json::array();
  const auto& cols = crosscheck_columns();
  for (const auto& r : rows) {
    const auto cells = crosscheck_row(r);
    Json obj;
    for (std::size_t t = 0; t < cols.size(); ++t) obj[cols[t]] = cells[t];
    obj["pipeline_betti"] = vector_to_json(r.pipeline_betti);
    if (r.paper_formula_betti) obj["paper_formula_betti"] = vector_to_json(*r.paper_formula_betti);
    if (r.paper_type_betti) obj["paper_type_betti"] = vector_to_json(*r.paper_type_betti);
    if (r.oracle_betti) obj["oracle_betti"] = vector_to_json(*r.oracle_betti);
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace cochordal
