// Reads an edge list, extracts a constructible system and prints the
// Betti table of the edge ideal.
#include <iostream>

#include "cochordal/cochordal.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: betti_demo EDGES\n";
    return 2;
  }
  using namespace cochordal;
  try {
    const SimpleGraph g = read_edge_list(argv[1]);
    const ConstructibleSystem sys = extract_system(g);
    std::cout << "system: " << system_to_json(sys).dump() << '\n';
    std::cout << "type:   " << type_of(sys).to_string() << '\n';
    std::cout << render_table(table_from_type(type_of(sys)));
  } catch (const NotCochordalError& e) {
    std::cerr << "not cochordal: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 4;
  }
}
