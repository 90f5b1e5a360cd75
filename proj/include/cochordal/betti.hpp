#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cochordal/bigint.hpp"
#include "cochordal/error.hpp"
#include "cochordal/type_sequence.hpp"

namespace cochordal {

/// Graded Betti numbers beta_{i,j}(S/I); zero entries are not stored.
class BettiTable {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  void set(std::uint64_t i, std::uint64_t j, const BigInt& value) {
    if (value == 0) {
      entries_.erase({i, j});
    } else {
      entries_[{i, j}] = value;
    }
  }

  void add(std::uint64_t i, std::uint64_t j, const BigInt& value) {
    if (value == 0) return;
    entries_[{i, j}] += value;
  }

  BigInt get(std::uint64_t i, std::uint64_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  /// Total Betti number beta_i summed over internal degrees.
  BigInt total(std::uint64_t i) const {
    BigInt s = 0;
    for (const auto& [k, v] : entries_) {
      if (k.first == i) s += v;
    }
    return s;
  }

  const std::map<Key, BigInt>& entries() const noexcept { return entries_; }

  std::uint64_t pd() const {
    std::uint64_t p = 0;
    for (const auto& [k, v] : entries_) p = std::max(p, k.first);
    return p;
  }

  std::uint64_t reg() const {
    std::uint64_t r = 0;
    for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
    return r;
  }

  /// True iff every entry with i >= 1 sits at j = i + 1.
  bool is_linear() const {
    for (const auto& [k, v] : entries_) {
      if (k.first >= 1 && k.second != k.first + 1) return false;
    }
    return true;
  }

  /// (beta_{1,2}, beta_{2,3}, ...) up to the last nonzero entry.
  std::vector<BigInt> linear_strand() const {
    std::vector<BigInt> out;
    for (const auto& [k, v] : entries_) {
      if (k.first >= 1 && k.second == k.first + 1) {
        if (out.size() < k.first) out.resize(k.first, 0);
        out[k.first - 1] = v;
      }
    }
    return out;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, BigInt> entries_;
};

struct ResolutionSummary {
  std::uint64_t pd = 0;
  std::uint64_t reg = 0;
  BigInt first_betti = 0;

  friend bool operator==(const ResolutionSummary&, const ResolutionSummary&) = default;
};

/// beta_i(S/I) for a cochordal graph of the given type, i >= 1:
///   C(a_k, i) + C(a_{k-1} + 1, i) + ... + C(a_1 + k - 1, i) - C(k, i + 1).
///
/// Evaluated per run. On a descending run the argument a_m + k - m is
/// constant, so the run contributes length * C(c, i); on a repeated-value run
/// the arguments are consecutive and the hockey-stick identity collapses the
/// sum to C(c + length, i + 1) - C(c, i + 1).
inline BigInt betti_from_type(const TypeSequence& t, std::uint64_t i) {
  if (i == 0) throw Error(Errc::out_of_range, "homological degree must be >= 1");
  if (t.empty()) return 0;
  BigInt total = 0;
  std::uint64_t offset = 0;
  for (const auto& run : t.runs()) {
    const BigInt c = BigInt(run.first) + offset;
    if (run.step == -1) {
      total += BigInt(run.length) * binomial(c, BigInt(i));
    } else {
      total += binomial(c + run.length, BigInt(i + 1)) - binomial(c, BigInt(i + 1));
    }
    offset += run.length;
  }
  total -= binomial(BigInt(t.size()), BigInt(i + 1));
  return total;
}

/// max{a_k, a_{k-1} + 1, ..., a_1 + k - 1}; 0 for the empty type.
inline std::uint64_t pd_from_type(const TypeSequence& t) {
  std::uint64_t best = 0;
  std::uint64_t offset = 0;
  for (const auto& run : t.runs()) {
    const std::uint64_t top = run.step == -1 ? run.first + offset : run.first + offset + run.length - 1;
    best = std::max(best, top);
    offset += run.length;
  }
  return best;
}

/// (beta_1, ..., beta_pd), optionally truncated to the first `max_degree` entries.
inline std::vector<BigInt> betti_vector(const TypeSequence& t,
                                        std::optional<std::uint64_t> max_degree = std::nullopt) {
  std::uint64_t len = pd_from_type(t);
  if (max_degree) len = std::min(len, *max_degree);
  std::vector<BigInt> out;
  out.reserve(len);
  for (std::uint64_t i = 1; i <= len; ++i) out.push_back(betti_from_type(t, i));
  return out;
}

/// beta_i(S/I) through the Betti-splitting recursion
///   beta_i(I_m) = beta_i(I_{m-1}) + beta_{i-1}(I_{m-1}) + C(a_m, i)   (i >= 2),
///   beta_1(I_m) = a_1 + ... + a_m,
/// with binomials taken from Pascal rows.
inline BigInt betti_recursive(const TypeSequence& t, std::uint64_t i) {
  if (i == 0) throw Error(Errc::out_of_range, "homological degree must be >= 1");
  const auto vals = t.expand();
  const std::size_t k = vals.size();
  if (k == 0) return 0;

  auto pascal_row = [i](std::uint64_t a) {
    std::vector<BigInt> row(i + 1, 0);
    row[0] = 1;
    for (std::uint64_t r = 1; r <= a; ++r) {
      for (std::uint64_t c = std::min<std::uint64_t>(r, i); c >= 1; --c) row[c] += row[c - 1];
    }
    return row;
  };

  // beta[d] = beta_d(S/I_m), d = 1..i
  std::vector<BigInt> beta = pascal_row(vals[k - 1]);
  beta[0] = 0;
  BigInt linear_sum = vals[k - 1];
  for (std::size_t m = 2; m <= k; ++m) {
    const std::uint64_t a = vals[k - m];
    const auto row = pascal_row(a);
    linear_sum += a;
    for (std::uint64_t d = i; d >= 2; --d) beta[d] = beta[d] + beta[d - 1] + row[d];
    beta[1] = linear_sum;
  }
  return beta[i];
}

inline ResolutionSummary summarize(const TypeSequence& t) {
  ResolutionSummary s;
  s.pd = pd_from_type(t);
  s.reg = t.empty() ? 0 : 1;
  s.first_betti = t.sum<BigInt>();
  return s;
}

/// Linear Betti table of S/I determined by a type: beta_{0,0} = 1 and
/// beta_{i,i+1} for 1 <= i <= pd (truncated at `max_degree`).
inline BettiTable table_from_type(const TypeSequence& t,
                                  std::optional<std::uint64_t> max_degree = std::nullopt) {
  BettiTable b;
  b.set(0, 0, 1);
  const auto vec = betti_vector(t, max_degree);
  for (std::size_t d = 0; d < vec.size(); ++d) b.set(d + 1, d + 2, vec[d]);
  return b;
}

/// Renders in the ideal-indexed layout: column c holds beta_{c+1,*}(S/I) =
/// beta_c(I), row s holds the degree-s strand of I. Only "0: 1" is printed
/// when I = 0. Columns past `max_columns` are replaced by "...".
inline std::string render_table(const BettiTable& b, std::uint64_t max_columns = 32) {
  std::uint64_t pd = 0;
  std::uint64_t lo = UINT64_MAX;
  std::uint64_t hi = 0;
  for (const auto& [k, v] : b.entries()) {
    if (k.first == 0) continue;
    pd = std::max(pd, k.first);
    const std::uint64_t strand = k.second - k.first + 1;
    lo = std::min(lo, strand);
    hi = std::max(hi, strand);
  }
  if (pd == 0) return "0: 1\n";

  const std::uint64_t shown = std::min(pd, max_columns);
  const bool truncated = shown < pd;
  std::vector<std::vector<std::string>> cells(hi - lo + 1, std::vector<std::string>(shown, "-"));
  std::vector<std::size_t> width(shown, 1);
  for (std::uint64_t c = 0; c < shown; ++c) width[c] = std::to_string(c).size();
  for (const auto& [k, v] : b.entries()) {
    if (k.first == 0 || k.first > shown) continue;
    const std::uint64_t c = k.first - 1;
    auto& cell = cells[k.second - k.first + 1 - lo][c];
    cell = to_decimal(v);
    width[c] = std::max(width[c], cell.size());
  }
  const std::size_t label_width = std::to_string(hi).size();

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream os;
  os << std::string(label_width + 1, ' ');
  for (std::uint64_t c = 0; c < shown; ++c) os << ' ' << pad(std::to_string(c), width[c]);
  if (truncated) os << " ...";
  os << '\n';
  for (std::uint64_t s = lo; s <= hi; ++s) {
    os << pad(std::to_string(s), label_width) << ':';
    for (std::uint64_t c = 0; c < shown; ++c) os << ' ' << pad(cells[s - lo][c], width[c]);
    if (truncated) os << " ...";
    os << '\n';
  }
  return os.str();
}

}  // namespace cochordal
