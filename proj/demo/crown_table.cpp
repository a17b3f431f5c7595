// Prints the twelve crown-graph parameters for small n, each one checked
// against its constructed witness.
#include <cstdio>

#include "thinness/thinness.hpp"

int main() {
  using namespace thinness;
  std::printf("%-10s", "n");
  for (std::size_t n = 1; n <= 8; ++n) std::printf("%4zu", n);
  std::printf("\n");
  for (const auto& [name, spec] : variants::all) {
    std::printf("%-10.*s", static_cast<int>(name.size()), name.data());
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto g = crown(n);
      const Layout l = crown_family::construct(spec, n);
      const bool ok = verify(g.graph, l, spec).ok();
      std::printf("%4zu%s", width(l), ok ? "" : "!");
    }
    std::printf("\n");
  }
}
