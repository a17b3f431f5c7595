// Usage: demo_cograph_calc "((1+1)*(1+1+1))"
#include <cstdio>
#include <exception>

#include "thinness/thinness.hpp"

int main(int argc, char** argv) {
  using namespace thinness;
  const char* text = argc > 1 ? argv[1] : "((1+1)*(1+1+1))";
  try {
    const auto e = cograph::parse_cotree(text);
    const Graph g = cograph::evaluate(e);
    const Layout wt = cograph::witness_thin(e);
    const Layout wf = cograph::witness_fp(e);
    std::printf("%s: %zu vertices, %zu edges\n", text, g.size(), g.edge_count());
    std::printf("thin = %zu (witness %s)\n", cograph::thin_cograph(e),
                verify(g, wt, variants::thin) ? "verified" : "REJECTED");
    std::printf("fp   = %zu (witness %s)\n", cograph::fp_cograph(e),
                verify(g, wf, variants::fp) ? "verified" : "REJECTED");
    if (g.size() <= 9) {
      std::printf("exact thin = %zu, exact fp = %zu\n", exact::exact_value(g, variants::thin).value,
                  exact::exact_value(g, variants::fp).value);
    }
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "%s\n", ex.what());
    return 2;
  }
}
