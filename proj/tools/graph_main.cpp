// graph: cochordality and Betti numbers for a graph given as an edge list.
#include <iostream>

#include "cli_common.hpp"

using namespace cochordal;

int main(int argc, char** argv) {
  CLI::App app{"Cochordality and edge-ideal Betti numbers of a graph file", "graph"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Globals globals;
  globals.attach(app);

  std::string betti_edges, method = "pipeline", betti_format = "text";
  std::optional<std::uint64_t> degree;
  bool ideal_indexed = false;
  auto* bt = app.add_subcommand("betti", "Betti table of S/I(G)");
  bt->add_option("--edges", betti_edges, "edge list file")->required();
  bt->add_option("--method", method)->check(CLI::IsMember({"pipeline", "oracle"}));
  bt->add_option("--i", degree, "single homological degree");
  bt->add_flag("--ideal-indexed", ideal_indexed, "index by the ideal I instead of S/I");
  bt->add_option("--format", betti_format)->check(CLI::IsMember({"text", "json"}));

  std::string check_edges, check_format = "text";
  auto* ck = app.add_subcommand("check", "chordal / cochordal flags and a type sequence");
  ck->add_option("--edges", check_edges, "edge list file")->required();
  ck->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

  return cli::run(app, argc, argv, [&]() -> int {
    if (*ck) {
      const SimpleGraph g = read_edge_list(check_edges);
      const bool chordal = is_chordal(g);
      const bool cochordal = is_cochordal(g);
      Json out{{"vertices", g.order()}, {"edges", g.edge_count()}, {"chordal", chordal}, {"cochordal", cochordal}};
      std::string text = "vertices=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) +
                         " chordal=" + (chordal ? "yes" : "no") + " cochordal=" + (cochordal ? "yes" : "no");
      if (cochordal) {
        const auto sys = extract_system(g);
        out["type"] = type_of(sys).to_string();
        out["system"] = system_to_json(sys);
        text += "\ntype=" + type_of(sys).to_string() + "\n";
        for (const auto& s : sys.steps) text += "  star " + std::to_string(s.u) + " -> {" + cli::join_labels(s.cover) + "}\n";
      } else {
        text += "\n";
        if (auto m = find_induced_two_matching(g)) {
          const std::vector<Label> e1{g.label(m->first.first), g.label(m->first.second)};
          const std::vector<Label> e2{g.label(m->second.first), g.label(m->second.second)};
          out["witness"] = {e1, e2};
          text += "witness={" + cli::join_labels(e1) + "} {" + cli::join_labels(e2) + "}\n";
        }
      }
      std::cout << (check_format == "json" ? out.dump(2) + "\n" : text);
      return 0;
    }

    const SimpleGraph g = read_edge_list(betti_edges);
    BettiTable table;
    std::string header = "# " + betti_edges + "  method=" + method;
    if (method == "pipeline") {
      const TypeSequence type = type_of(extract_system(g));
      header += "  type=" + type.to_string(16);
      table = table_from_type(type);
    } else {
      const auto cfg = globals.oracle();
      header += "  char=" + std::to_string(cfg.characteristic);
      table = graded_betti_oracle(g, cfg);
    }
    if (degree) {
      const std::uint64_t i = *degree + (ideal_indexed ? 1 : 0);
      BigInt v = 0;
      for (const auto& [k, b] : table.entries()) {
        if (k.first == i) v += b;
      }
      if (betti_format == "json") {
        std::cout << Json{{"method", method}, {"i", *degree}, {"module", ideal_indexed ? "I" : "S/I"},
                          {"beta", to_decimal(v)}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << header << '\n' << cli::single_value_line(*degree, ideal_indexed, v);
      }
      return 0;
    }
    if (betti_format == "json") {
      std::cout << Json{{"method", method}, {"pd", table.pd()}, {"table", betti_to_json(table, ideal_indexed)}}.dump(2)
                << '\n';
    } else {
      std::cout << header << '\n' << cli::describe_table(table, globals.max_columns);
    }
    return 0;
  });
}
