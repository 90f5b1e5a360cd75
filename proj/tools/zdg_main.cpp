// zdg: zero-divisor graphs of Z_n. Classification sweeps, Betti numbers by
// pipeline / printed closed form / oracle, and crosscheck reports.
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_common.hpp"

using namespace cochordal;

namespace {

struct BettiArgs {
  std::string n;
  std::string method = "pipeline";
  std::optional<std::uint64_t> degree;
  bool ideal_indexed = false;
  std::string format = "text";
};

std::string classify_line(u64 n) {
  const auto f = factorize(n);
  const auto s = factor_shape(f);
  std::ostringstream os;
  os << n << " = " << f.to_string() << "  cochordal=";
  if (s.shape != FactorShape::other) {
    os << "yes (form " << shape_name(s.shape) << ")";
  } else {
    const auto w = obstruction_witness(f);
    os << "no  witness=(" << w.x << ',' << w.y << ',' << w.u << ',' << w.v << ")";
  }
  return os.str();
}

Json classify_json(u64 n) {
  const auto f = factorize(n);
  const auto s = factor_shape(f);
  Json j{{"n", n}, {"factorization", f.to_string()}, {"shape", shape_name(s.shape)},
         {"cochordal", s.shape != FactorShape::other}};
  if (s.shape == FactorShape::other) {
    const auto w = obstruction_witness(f);
    j["witness"] = {w.x, w.y, w.u, w.v};
  }
  return j;
}

/// S/I degree asked for by --i.
std::uint64_t module_degree(const BettiArgs& a) { return *a.degree + (a.ideal_indexed ? 1 : 0); }

BettiTable linear_table(const std::vector<BigInt>& vec) {
  BettiTable b;
  b.set(0, 0, 1);
  for (std::size_t d = 0; d < vec.size(); ++d) b.set(d + 1, d + 2, vec[d]);
  return b;
}

BigInt degree_total(const BettiTable& b, std::uint64_t i) {
  BigInt total = 0;
  for (const auto& [k, v] : b.entries()) {
    if (k.first == i) total += v;
  }
  return total;
}

int run_betti(const BettiArgs& a, const cli::Globals& g) {
  const u64 n = cli::parse_number(a.n);
  if (n < 2) throw cli::UsageError("n must be >= 2");
  if (a.method != "pipeline" && a.method != "paper" && a.method != "oracle") {
    throw cli::UsageError("unknown method '" + a.method + "'");
  }
  const auto f = factorize(n);
  // One extra degree so that truncation is visible in the table.
  const std::uint64_t shown = g.max_columns + 1;
  const bool json = a.format == "json";

  std::string header = "# Gamma(Z_" + std::to_string(n) + ")  n = " + f.to_string() + "  method=" + a.method;
  Json out{{"n", n}, {"method", a.method}};
  std::optional<BettiTable> table;
  std::optional<BigInt> single;
  std::optional<std::string> pd_text;
  std::string footer;

  if (a.method == "paper" && !classify(f)) {
    throw Error(Errc::not_applicable, "no printed closed form for n = " + std::to_string(n));
  }
  if (a.method == "pipeline" || a.method == "paper") {
    const TypeSequence type = extract_type_compressed(compressed_zdg(n));
    if (a.method == "pipeline") {
      header += "  type=" + type.to_string(16);
      out["type"] = type.to_string();
      if (a.degree) {
        const std::uint64_t i = module_degree(a);
        single = i == 0 ? BigInt(1) : betti_from_type(type, i);
      } else {
        table = table_from_type(type, shown);
        out["pd"] = pd_from_type(type);
        pd_text = std::to_string(pd_from_type(type));
      }
    } else {
      const BigInt pd = paper_pd(f);
      out["pd_printed"] = to_decimal(pd);
      pd_text = to_decimal(pd) + " (printed)";
      bool agrees = true;
      if (a.degree) {
        const std::uint64_t i = module_degree(a);
        single = i == 0 ? BigInt(1) : paper_closed_betti(f, i);
        agrees = i == 0 || *single == betti_from_type(type, i);
      } else {
        const auto printed = paper_closed_vector(f, shown);
        table = linear_table(printed);
        agrees = same_vector(printed, betti_vector(type, shown));
      }
      agrees = agrees && pd == pd_from_type(type);
      out["agrees_with_pipeline"] = agrees;
      footer = agrees ? "note: printed closed form agrees with pipeline\n"
                      : "warning: printed closed form disagrees with pipeline\n";
    }
  } else {
    const auto cfg = g.oracle();
    const SimpleGraph graph = zdg(n);
    const BettiTable b = graded_betti_oracle(graph, cfg);
    header += "  char=" + std::to_string(cfg.characteristic);
    if (a.degree) {
      single = degree_total(b, module_degree(a));
    } else {
      table = b;
      out["pd"] = b.pd();
    }
  }

  if (json) {
    if (single) {
      out["i"] = *a.degree;
      out["module"] = a.ideal_indexed ? "I" : "S/I";
      out["beta"] = to_decimal(*single);
    } else {
      out["table"] = betti_to_json(*table, a.ideal_indexed);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << header << '\n';
  if (single) {
    std::cout << cli::single_value_line(*a.degree, a.ideal_indexed, *single);
  } else {
    std::cout << cli::describe_table(*table, g.max_columns, pd_text);
  }
  std::cout << footer;
  return 0;
}

struct CrosscheckArgs {
  std::string range;
  std::string out;
  std::string format;
};

int run_crosscheck(const CrosscheckArgs& a, const cli::Globals& g) {
  const auto [lo, hi] = cli::parse_range(a.range);
  std::string format = a.format;
  if (format.empty()) format = a.out.size() >= 5 && a.out.substr(a.out.size() - 5) == ".json" ? "json" : "csv";

  CrosscheckOptions opts;
  opts.oracle = g.oracle();
  std::vector<CrosscheckReport> rows;
  std::size_t total = 0;
  std::size_t agree[4] = {0, 0, 0, 0}, disagree[4] = {0, 0, 0, 0};
  auto tally = [&](int slot, const std::optional<bool>& b) {
    if (b) ++(*b ? agree : disagree)[slot];
  };
  for (u64 n = lo; n <= hi; ++n) {
    ++total;
    auto r = crosscheck(n, opts);
    if (!r.cochordal) continue;
    tally(0, r.agree_formula);
    tally(1, r.agree_type);
    tally(2, r.agree_oracle);
    tally(3, r.agree_pd);
    rows.push_back(std::move(r));
  }
  const std::string report = format == "json" ? crosscheck_json(rows).dump(2) + "\n" : crosscheck_csv(rows);

  std::ostringstream summary;
  summary << "crosscheck " << lo << ".." << hi << ": " << total << " values, " << rows.size() << " cochordal";
  const char* names[4] = {"formula", "type", "oracle", "pd"};
  for (int s = 0; s < 4; ++s) summary << "; " << names[s] << " agree=" << agree[s] << " disagree=" << disagree[s];
  summary << '\n';

  if (a.out.empty()) {
    std::cout << report;
    std::cerr << summary.str();
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw Error(Errc::parse_error, "cannot write " + a.out);
    file << report;
    if (!file) throw Error(Errc::parse_error, "write failed for " + a.out);
    std::cout << summary.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of Z_n and the Betti numbers of their edge ideals", "zdg"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Globals globals;
  globals.attach(app);

  std::string classify_range;
  std::string classify_format = "text";
  auto* cls = app.add_subcommand("classify", "cochordality of Gamma(Z_n) with witnesses");
  cls->add_option("range", classify_range, "n or lo..hi")->required();
  cls->add_option("--format", classify_format)->check(CLI::IsMember({"text", "json"}));

  BettiArgs betti;
  auto* bt = app.add_subcommand("betti", "Betti table of S/I(Gamma(Z_n))");
  bt->add_option("n", betti.n)->required();
  bt->add_option("--method", betti.method)->check(CLI::IsMember({"pipeline", "paper", "oracle"}));
  bt->add_option("--i", betti.degree, "single homological degree");
  bt->add_flag("--ideal-indexed", betti.ideal_indexed, "index by the ideal I instead of S/I");
  bt->add_option("--format", betti.format)->check(CLI::IsMember({"text", "json"}));

  CrosscheckArgs cc;
  auto* cr = app.add_subcommand("crosscheck", "pipeline vs printed formulas vs oracle");
  cr->add_option("range", cc.range, "lo..hi")->required();
  cr->add_option("--out", cc.out, "report path");
  cr->add_option("--format", cc.format)->check(CLI::IsMember({"csv", "json"}));

  return cli::run(app, argc, argv, [&]() -> int {
    if (*cls) {
      const auto [lo, hi] = cli::parse_range(classify_range);
      if (classify_format == "json") {
        Json arr = Json::array();
        for (u64 n = lo; n <= hi; ++n) arr.push_back(classify_json(n));
        std::cout << arr.dump(2) << '\n';
      } else {
        for (u64 n = lo; n <= hi; ++n) std::cout << classify_line(n) << '\n';
      }
      return 0;
    }
    if (*bt) return run_betti(betti, globals);
    return run_crosscheck(cc, globals);
  });
}
