#pragma once

#include <charconv>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "cochordal/cochordal.hpp"

namespace cli {

inline constexpr int kUsage = 2;
inline constexpr int kNotCochordal = 3;
inline constexpr int kCapOrIo = 4;
inline constexpr int kNotApplicable = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flags shared by every subcommand.
struct Globals {
  std::optional<unsigned> workers;
  std::optional<std::size_t> oracle_cap;
  std::optional<std::uint32_t> characteristic;
  std::uint64_t max_columns = 32;

  void attach(CLI::App& app) {
    app.add_option("--workers", workers, "worker threads for the oracle");
    app.add_option("--oracle-cap", oracle_cap, "largest vertex count for the full oracle");
    app.add_option("--char", characteristic, "prime field characteristic for the oracle");
    app.add_option("--max-columns", max_columns, "widest Betti table to print")->check(CLI::PositiveNumber);
  }

  /// ORACLE_* / WORKERS, then ZDG_*, then flags.
  cochordal::OracleConfig oracle() const {
    auto cfg = cochordal::OracleConfig::from_env();
    auto env = [](const char* name) -> std::optional<unsigned long long> {
      const char* s = std::getenv(name);
      if (!s) return std::nullopt;
      unsigned long long v = 0;
      const char* end = s + std::char_traits<char>::length(s);
      auto [ptr, ec] = std::from_chars(s, end, v);
      if (ec != std::errc{} || ptr != end) throw UsageError(std::string("bad value for ") + name);
      return v;
    };
    if (auto v = env("ZDG_WORKERS")) cfg.workers = static_cast<unsigned>(*v);
    if (auto v = env("ZDG_ORACLE_CAP")) cfg.max_vertices = static_cast<std::size_t>(*v);
    if (auto v = env("ZDG_CHAR")) cfg.characteristic = static_cast<std::uint32_t>(*v);
    if (workers) cfg.workers = *workers;
    if (oracle_cap) cfg.max_vertices = *oracle_cap;
    if (characteristic) cfg.characteristic = *characteristic;
    return cfg;
  }
};

inline std::uint64_t parse_number(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

/// "n" or "lo..hi" with 2 <= lo <= hi.
inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  const std::uint64_t lo = parse_number(s.substr(0, dots));
  const std::uint64_t hi = dots == std::string::npos ? lo : parse_number(s.substr(dots + 2));
  if (lo < 2 || lo > hi) throw UsageError("range must satisfy 2 <= lo <= hi: '" + s + "'");
  return {lo, hi};
}

inline int exit_code(cochordal::Errc c) {
  using cochordal::Errc;
  switch (c) {
    case Errc::not_cochordal: return kNotCochordal;
    case Errc::cap_exceeded:
    case Errc::parse_error: return kCapOrIo;
    case Errc::not_applicable: return kNotApplicable;
    case Errc::out_of_range:
    case Errc::non_prime_characteristic: return kUsage;
    default: return 1;
  }
}

/// Parses, runs the selected command and maps failures to exit codes.
inline int run(CLI::App& app, int argc, char** argv, const std::function<int()>& body) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cochordal::NotCochordalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (const auto& w = e.witness()) {
      std::cerr << "induced 2-matching on indices {" << w->first.first << "," << w->first.second << "} {"
                << w->second.first << "," << w->second.second << "}\n";
    }
    return kNotCochordal;
  } catch (const cochordal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
}

inline std::string join_labels(const std::vector<cochordal::Label>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
  return s;
}

/// Rendered table plus pd and reg. `pd` overrides the table's own value,
/// which is wrong once the table was computed only up to the shown columns.
inline std::string describe_table(const cochordal::BettiTable& b, std::uint64_t max_columns,
                                  std::optional<std::string> pd = std::nullopt) {
  std::string out = cochordal::render_table(b, max_columns);
  out += "pd = " + pd.value_or(std::to_string(b.pd())) + "  reg = " + std::to_string(b.reg()) + "\n";
  return out;
}

/// beta_i of S/I, or of I when ideal-indexed (beta_i(I) = beta_{i+1}(S/I)).
inline std::string single_value_line(std::uint64_t i, bool ideal_indexed, const cochordal::BigInt& v) {
  return std::string("beta_") + std::to_string(i) + (ideal_indexed ? "(I) = " : "(S/I) = ") +
         cochordal::to_decimal(v) + "\n";
}

}  // namespace cli
