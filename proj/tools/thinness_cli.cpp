#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thinness/io.hpp"
#include "thinness/thinness.hpp"

#ifndef THINNESS_VERSION
#define THINNESS_VERSION "dev"
#endif

namespace {

using namespace thinness;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw io::FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) { return io::parse(read_source(path)); }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

VariantSpec variant_or_throw(const std::string& name) {
  auto spec = parse_variant(name);
  if (!spec) throw CLI::ValidationError("--variant", "unknown variant '" + name + "'");
  return *spec;
}

std::string variant_names() {
  std::string out;
  for (const auto& nv : variants::all) out += (out.empty() ? "" : "|") + std::string(nv.name);
  return out;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string expr;
  std::string graph;
};

int run_gen(const GenArgs& a) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw CLI::ValidationError(what, "required and must be positive for " + a.family);
  };
  Graph g;
  if (a.family == "crown") {
    need(a.n > 0, "--n");
    g = crown(a.n).graph;
  } else if (a.family == "grid") {
    need(a.n > 0, "--n");
    need(a.m > 0, "--m");
    g = grid(a.n, a.m).graph;
  } else if (a.family == "complete") {
    need(a.n > 0, "--n");
    g = complete(a.n);
  } else if (a.family == "edgeless") {
    g = edgeless(a.n);
  } else if (a.family == "path") {
    need(a.n > 0, "--n");
    g = path(a.n);
  } else if (a.family == "cycle") {
    need(a.n >= 3, "--n");
    g = cycle(a.n);
  } else if (a.family == "matching") {
    need(a.n > 0, "--n");
    g = matching_nk2(a.n);
  } else if (a.family == "random") {
    std::mt19937_64 rng(a.seed);
    g = random_graph(a.n, a.p, rng);
  } else if (a.family == "cograph") {
    g = cograph::evaluate(cograph::parse_cotree(a.expr));
  } else if (a.family == "complement") {
    g = complement(io::graph_from_json(read_json(a.graph)));
  }
  emit(io::to_json(g));
  return exit_ok;
}

int run_construct(const std::string& family, const std::string& variant, std::size_t n, std::size_t m) {
  if (n == 0) throw CLI::ValidationError("--n", "must be positive");
  Layout l;
  if (family == "crown") {
    l = crown_family::construct(variant_or_throw(variant), n);
  } else if (family == "grid-thin") {
    if (m == 0) throw CLI::ValidationError("--m", "must be positive");
    l = grid_family::thin_layout(n, m);
  } else if (family == "grid-fp2") {
    l = grid_family::fp_gr2_layout(n);
  } else {
    l = grid_family::fp_grn_layout(n);
  }
  emit(io::to_json(normalized(l)));
  return exit_ok;
}

int run_verify(const std::string& graph, const std::string& layout, const std::string& variant) {
  const VariantSpec spec = variant_or_throw(variant);
  const Graph g = io::graph_from_json(read_json(graph));
  const Layout l = io::layout_from_json(read_json(layout));
  const Verdict v = verify(g, l, spec);
  json out = io::to_json(v);
  out["variant"] = std::string(variant_name(spec));
  out["width"] = width(l);
  emit(out);
  return v ? exit_ok : exit_negative;
}

int run_exact(const std::string& graph, const std::string& variant, long long budget_ms, unsigned jobs) {
  const VariantSpec spec = variant_or_throw(variant);
  const Graph g = io::graph_from_json(read_json(graph));
  exact::Options opts;
  if (budget_ms > 0) opts.budget = std::chrono::milliseconds(budget_ms);
  opts.jobs = jobs;
  const auto r = exact::exact_value(g, spec, opts);
  if (!r.conclusive) {
    emit({{"inconclusive", true}, {"upper", r.value}, {"layout", io::to_json(normalized(r.layout))}});
    return exit_negative;
  }
  emit({{"value", r.value}, {"layout", io::to_json(normalized(r.layout))}});
  return exit_ok;
}

int run_cograph(const std::string& expr, const std::string& param, bool witness) {
  const auto e = cograph::parse_cotree(expr);
  const bool fp = param == "fp";
  json out = {{"param", param},
              {"value", fp ? cograph::fp_cograph(e) : cograph::thin_cograph(e)},
              {"graph", io::to_json(cograph::evaluate(e))}};
  if (witness) out["layout"] = io::to_json(fp ? cograph::witness_fp(e) : cograph::witness_thin(e));
  emit(out);
  return exit_ok;
}

int run_color_greedy(const std::string& graph, const std::string& order_path) {
  const Graph g = io::graph_from_json(read_json(graph));
  const auto order = io::order_from_json(read_json(order_path));
  const auto colors = coloring::greedy_color(g, order);
  emit({{"colors", colors}, {"count", coloring::colors_used(colors)}});
  return exit_ok;
}

int run_color_perfect(const std::string& graph, const std::string& layout) {
  const Graph g = io::graph_from_json(read_json(graph));
  const Layout l = io::layout_from_json(read_json(layout));
  validate(g, l);
  std::vector<Vertex> order;
  try {
    order = coloring::build_perfect_order(g, l);
  } catch (const std::invalid_argument& e) {
    emit({{"ok", false}, {"error", e.what()}});
    return exit_negative;
  }
  emit({{"ok", true}, {"order", order}});
  return exit_ok;
}

int run_reduce(const std::string& which, const std::string& graph, const std::string& order_path,
               const std::string& mu_path, bool check) {
  const Graph g = io::graph_from_json(read_json(graph));
  const auto order = io::order_from_json(read_json(order_path));
  const auto mu = io::mu_from_json(read_json(mu_path));
  if (mu.size() != g.size()) throw io::FormatError("mu has " + std::to_string(mu.size()) + " entries, graph has " + std::to_string(g.size()));
  for (auto m : mu)
    if (m == 0) throw io::FormatError("mu entries must be positive");
  coloring::detail::positions(g, order);
  if (const auto pv = coloring::verify_proper_interval_order(g, order); !pv) {
    emit({{"ok", false},
          {"error", "order is not a proper interval order"},
          {"pattern", std::string(coloring::pattern_name(pv.pattern))},
          {"witness", pv.witness}});
    return exit_negative;
  }
  const coloring::MuInstance inst(g, order, mu);
  const auto red = which == "gprime" ? coloring::reduce_gprime(inst) : coloring::reduce_gdoubleprime(inst);
  json out = {{"graph", io::to_json(red.graph)}, {"layout", io::to_json(red.layout)}, {"k", inst.size()}};
  if (!check) {
    emit(out);
    return exit_ok;
  }
  const bool mu_ok = exact::is_mu_colorable(inst.graph(), inst.mu());
  out["mu_colorable"] = mu_ok;
  out["k_colorable"] = exact::is_k_colorable(red.graph, inst.size());
  emit(out);
  return mu_ok ? exit_ok : exit_negative;
}

int run_bounds(std::size_t n, std::size_t m, const std::string& variant) {
  if (n == 0 || m == 0) throw CLI::ValidationError("--n/--m", "must be positive");
  grid_family::Bounds b;
  if (variant == "thin") {
    b = grid_family::thin_bounds(n, m);
  } else if (std::min(n, m) == 2) {
    const std::size_t v = grid_family::fp_gr2_value(std::max(n, m));
    b = {v, v};
  } else if (n == m) {
    b = grid_family::fp_grn_bounds(n);
  } else {
    throw CLI::ValidationError("--variant", "fp bounds are known for square grids and grids with a side of 2");
  }
  emit({{"lower", b.lower}, {"upper", b.upper}});
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thinness parameters: constructions, verification and exact values"};
  app.set_version_flag("--version", std::string("thinness ") + THINNESS_VERSION);
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a graph as JSON");
  gen_cmd->add_option("family", gen.family, "crown|grid|complete|edgeless|path|cycle|matching|random|cograph|complement")
      ->required()
      ->check(CLI::IsMember({"crown", "grid", "complete", "edgeless", "path", "cycle", "matching", "random",
                             "cograph", "complement"}));
  gen_cmd->add_option("--n", gen.n, "Size parameter");
  gen_cmd->add_option("--m", gen.m, "Second grid dimension");
  gen_cmd->add_option("--p", gen.p, "Edge probability for random")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed for random");
  gen_cmd->add_option("--expr", gen.expr, "Cotree expression for cograph");
  gen_cmd->add_option("--graph", gen.graph, "Graph JSON for complement ('-' for stdin)");

  std::string family, variant;
  std::size_t n = 0, m = 0;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a witness layout");
  construct_cmd->add_option("family", family, "crown|grid-thin|grid-fp2|grid-fpn")
      ->required()
      ->check(CLI::IsMember({"crown", "grid-thin", "grid-fp2", "grid-fpn"}));
  construct_cmd->add_option("--variant", variant, variant_names());
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--m", m);

  std::string graph_path, layout_path = "-";
  auto* verify_cmd = app.add_subcommand("verify", "Check a layout against a variant");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--layout", layout_path, "Layout JSON ('-' or omitted: stdin)");
  verify_cmd->add_option("--variant", variant, variant_names())->required();

  long long budget_ms = 0;
  unsigned jobs = 1;
  auto* exact_cmd = app.add_subcommand("exact", "Exact value by exhaustive search");
  exact_cmd->add_option("--graph", graph_path)->required();
  exact_cmd->add_option("--variant", variant, variant_names())->required();
  exact_cmd->add_option("--budget-ms", budget_ms, "Wall-clock budget, 0 for none")->check(CLI::NonNegativeNumber);
  exact_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string expr, param;
  bool witness = false;
  auto* cograph_cmd = app.add_subcommand("cograph", "thin or fp of a cograph given by a cotree expression");
  cograph_cmd->add_option("--expr", expr)->required();
  cograph_cmd->add_option("--param", param)->required()->check(CLI::IsMember({"thin", "fp"}));
  cograph_cmd->add_flag("--witness", witness, "Also emit a witness layout");

  std::string color_mode, order_path;
  auto* color_cmd = app.add_subcommand("color", "Greedy coloring and perfect orders");
  color_cmd->add_option("mode", color_mode, "greedy|perfect-order")
      ->required()
      ->check(CLI::IsMember({"greedy", "perfect-order"}));
  color_cmd->add_option("--graph", graph_path)->required();
  color_cmd->add_option("--order", order_path, "Order JSON {\"order\": [...]} for greedy");
  color_cmd->add_option("--layout", layout_path, "Layout JSON for perfect-order");

  std::string reduction, mu_path;
  bool check = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "mu-coloring to k-coloring reductions");
  reduce_cmd->add_option("which", reduction, "gprime|gpp")->required()->check(CLI::IsMember({"gprime", "gpp"}));
  reduce_cmd->add_option("--graph", graph_path)->required();
  reduce_cmd->add_option("--order", order_path, "Proper interval order {\"order\": [...]}")->required();
  reduce_cmd->add_option("--mu", mu_path, "{\"mu\": [...]}")->required();
  reduce_cmd->add_flag("--check", check, "Also decide mu-colorability and k-colorability");

  std::string bounds_family;
  auto* bounds_cmd = app.add_subcommand("bounds", "Known bounds for grid graphs");
  bounds_cmd->add_option("family", bounds_family, "grid")->required()->check(CLI::IsMember({"grid"}));
  bounds_cmd->add_option("--n", n)->required();
  bounds_cmd->add_option("--m", m)->required();
  bounds_cmd->add_option("--variant", variant, "thin|fp")->required()->check(CLI::IsMember({"thin", "fp"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (construct_cmd->parsed()) {
      if (family == "crown" && variant.empty()) throw CLI::ValidationError("--variant", "required for crown");
      return run_construct(family, variant, n, m);
    }
    if (verify_cmd->parsed()) return run_verify(graph_path, layout_path, variant);
    if (exact_cmd->parsed()) return run_exact(graph_path, variant, budget_ms, jobs);
    if (cograph_cmd->parsed()) return run_cograph(expr, param, witness);
    if (color_cmd->parsed()) {
      if (color_mode == "greedy") {
        if (order_path.empty()) throw CLI::ValidationError("--order", "required for greedy");
        return run_color_greedy(graph_path, order_path);
      }
      return run_color_perfect(graph_path, layout_path);
    }
    if (reduce_cmd->parsed()) return run_reduce(reduction, graph_path, order_path, mu_path, check);
    if (bounds_cmd->parsed()) return run_bounds(n, m, variant);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
