#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cochordal/error.hpp"

namespace cochordal {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// Pollard rho with Brent's cycle detection; n is odd and composite.
inline u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace detail

struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, unsigned>> factors;  // ascending primes

  std::size_t prime_count() const noexcept { return factors.size(); }

  /// "2^2·3^2" (U+00B7 separator).
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < factors.size(); ++t) {
      if (t) os << "·";
      os << factors[t].first;
      if (factors[t].second > 1) os << '^' << factors[t].second;
    }
    return os.str();
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline Factorization factorize(u64 n) {
  if (n < 2) throw Error(Errc::out_of_range, "factorize requires n >= 2");
  Factorization f;
  f.n = n;
  std::vector<u64> primes;
  u64 m = n;
  for (u64 p = 2; p < 1000 && p * p <= m; ++p) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  detail::split(m, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p) {
      ++f.factors.back().second;
    } else {
      f.factors.emplace_back(p, 1);
    }
  }
  return f;
}

inline u64 ipow(u64 base, unsigned e) {
  u64 r = 1;
  while (e--) r *= base;
  return r;
}

inline u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, a] : f.factors) phi *= ipow(p, a - 1) * (p - 1);
  return phi;
}

inline u64 euler_phi(u64 n) { return n == 1 ? 1 : euler_phi(factorize(n)); }

/// All divisors of f.n, ascending.
inline std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, a] : f.factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= a; ++e) {
      pk *= p;
      for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cochordal
