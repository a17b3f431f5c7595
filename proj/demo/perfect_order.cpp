// Colors a precedence proper 2-thin graph greedily along the perfect order
// obtained from its certificate.
#include <cstdio>

#include "thinness/thinness.hpp"

int main() {
  using namespace thinness;
  // two paths 0-1-2 and 3-4-5 with cross edges 2-3, 2-4, 1-3
  const Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {2, 3}, {2, 4}, {1, 3}});
  const Layout l = layout_from_sequence({{0, 1, 2}, {3, 4, 5}});
  std::printf("certificate: %s\n", verify(g, l, variants::fpp) ? "ok" : "rejected");

  const auto order = coloring::build_perfect_order(g, l);
  std::printf("perfect order:");
  for (Vertex v : order) std::printf(" %zu", v);
  std::printf(" (%s)\n", coloring::verify_perfect_order(g, order) ? "perfect" : "not perfect");

  const auto colors = coloring::greedy_color(g, order);
  std::printf("greedy colors: %zu, chromatic number: %zu\n", coloring::colors_used(colors),
              exact::chromatic_number(g));
}
