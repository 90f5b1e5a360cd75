#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cochordal {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex label, e.g. a residue mod n or an edge-list label.
using Label = std::uint64_t;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Exact binomial coefficient C(n, k); zero when k > n.
///
/// Multiplicative evaluation: after step t the accumulator holds
/// C(n - k + t, t), so every intermediate division is exact.
inline BigInt binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt kk = k;
  if (kk > n - kk) kk = n - kk;
  const std::uint64_t steps = static_cast<std::uint64_t>(kk);
  const BigInt base = n - kk;
  BigInt acc = 1;
  for (std::uint64_t t = 1; t <= steps; ++t) {
    acc *= base + t;
    acc /= t;
  }
  return acc;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  return binomial(BigInt(n), BigInt(k));
}

}  // namespace cochordal
