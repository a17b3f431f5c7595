#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace thinness;

namespace {

Layout crown3_thin_witness(const CrownLabeling& lab) {
  auto v = [&](std::size_t i) { return lab.v(i); };
  auto p = [&](std::size_t i) { return lab.v_prime(i); };
  return Layout{{v(1), p(2), p(3), v(3), v(2), p(1)}, {{v(1), p(3), v(2)}, {p(2), v(3), p(1)}}};
}

}  // namespace

TEST(Variants, NamesRoundTrip) {
  for (const auto& [name, spec] : variants::all) {
    EXPECT_EQ(parse_variant(name), spec);
    EXPECT_EQ(variant_name(spec), name);
  }
  EXPECT_FALSE(parse_variant("thinn").has_value());
  EXPECT_EQ(variants::all.size(), 12u);
}

TEST(Variants, RelaxationLattice) {
  EXPECT_TRUE(relaxes(variants::thin, variants::pthin));
  EXPECT_TRUE(relaxes(variants::thin, variants::compfpp));
  EXPECT_TRUE(relaxes(variants::fp, variants::fpp));
  EXPECT_FALSE(relaxes(variants::fp, variants::thin));
  EXPECT_FALSE(relaxes(variants::indthin, variants::compthin));
}

TEST(Consistency, TrivialAndWitness) {
  const Graph k1 = complete(1);
  EXPECT_TRUE(is_consistent(k1, Layout{{0}, {{0}}}));

  const auto [g, lab] = crown(3);
  EXPECT_TRUE(is_consistent(g, crown3_thin_witness(lab)));
}

TEST(Consistency, ReportsFirstBreakingTriple) {
  const auto [g, lab] = crown(3);
  auto v = [&](std::size_t i) { return lab.v(i); };
  auto p = [&](std::size_t i) { return lab.v_prime(i); };
  const Layout l{{v(1), v(2), p(3), p(2), v(3), p(1)}, {{v(1), v(2)}, {p(3), p(2), v(3), p(1)}}};
  const Verdict verdict = is_consistent(g, l);
  ASSERT_FALSE(verdict);
  EXPECT_EQ(verdict.violation, Violation::breaking_triple);
  EXPECT_EQ(*verdict.triple, (BreakingTriple{v(1), v(2), p(2), Direction::forward}));
}

TEST(Consistency, AgreesWithNaiveTripleCheck) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Graph g = oracle::random_graph_n(n, rng);
    const Layout l = oracle::random_layout(n, 1 + trial % 3, rng);
    const Verdict weak = is_consistent(g, l);
    ASSERT_EQ(weak.ok(), oracle::naive_consistent(g, l));
    const Verdict strong = is_strongly_consistent(g, l);
    ASSERT_EQ(strong.ok(), oracle::naive_consistent(g, l) && oracle::naive_consistent(g, l, true));
    for (const Verdict* v : {&weak, &strong}) {
      if (v->ok()) continue;
      // the witness must refute consistency on its own
      const auto t = *v->triple;
      IndexedLayout idx(n, l);
      auto pos = [&](Vertex x) {
        return t.direction == Direction::forward ? idx.position(x) : n - 1 - idx.position(x);
      };
      EXPECT_LT(pos(t.r), pos(t.s));
      EXPECT_LT(pos(t.s), pos(t.t));
      EXPECT_EQ(idx.class_of(t.r), idx.class_of(t.s));
      EXPECT_TRUE(g.adjacent(t.r, t.t));
      EXPECT_FALSE(g.adjacent(t.s, t.t));
    }
  }
}

TEST(StrongConsistency, Examples) {
  const auto [g, lab] = crown(2);
  const Layout l{{lab.v(1), lab.v_prime(2), lab.v(2), lab.v_prime(1)},
                 {{lab.v(1), lab.v_prime(2), lab.v(2), lab.v_prime(1)}}};
  EXPECT_TRUE(is_strongly_consistent(g, l));
  EXPECT_TRUE(check_strong_via_neighborhoods(g, l));

  std::mt19937_64 rng(5);
  const Graph empty = edgeless(6);
  EXPECT_TRUE(is_strongly_consistent(empty, oracle::random_layout(6, 2, rng)));
}

TEST(StrongConsistency, ConsistentOddCrownLayoutIsNotStrong) {
  const auto [g, lab] = crown(5);
  const Layout l = crown_family::construct(variants::thin, 5);
  EXPECT_TRUE(is_consistent(g, l));
  const Verdict v = is_strongly_consistent(g, l);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.triple->direction, Direction::reversed);
  EXPECT_FALSE(check_strong_via_neighborhoods(g, l));
}

TEST(StrongConsistency, ReversalSymmetry) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_graph_n(6, rng);
    const Layout l = oracle::random_layout(6, 2, rng);
    EXPECT_EQ(is_strongly_consistent(g, l).ok(), is_strongly_consistent(g, reverse(l)).ok());
  }
}

TEST(NeighborhoodCheck, CompleteGraphSingleClass) {
  std::mt19937_64 rng(2);
  const Graph k5 = complete(5);
  EXPECT_TRUE(check_strong_via_neighborhoods(k5, oracle::random_layout(5, 1, rng)));
}

TEST(NeighborhoodCheck, AgreesWithTripleCheckOnRandomInputs) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph g = oracle::random_graph_n(n, rng);
    const Layout l = oracle::random_layout(n, 1 + trial % 3, rng);
    ASSERT_EQ(check_strong_via_neighborhoods(g, l).ok(), is_strongly_consistent(g, l).ok());
  }
}

TEST(Precedence, Examples) {
  EXPECT_TRUE(is_precedence(Layout{{0, 1, 2}, {{0}, {1}, {2}}}));
  EXPECT_FALSE(is_precedence(Layout{{0, 1, 2}, {{0, 2}, {1}}}));
  EXPECT_FALSE(is_precedence(Layout{{0, 1, 2}, {{2}, {0, 1}}}));
  const auto [g, lab] = grid(2, 5);
  EXPECT_TRUE(is_precedence(grid_family::fp_gr2_layout(5)));
}

TEST(ClassConstraints, Examples) {
  const Layout singletons{{0, 1, 2}, {{0}, {1}, {2}}};
  EXPECT_TRUE(classes_independent(complete(3), singletons));
  EXPECT_TRUE(classes_complete(complete(3), singletons));

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto [g, lab] = crown(n);
    Layout sides{lab.side_a(), {lab.side_a(), lab.side_b()}};
    for (Vertex v : lab.side_b()) sides.order.push_back(v);
    EXPECT_TRUE(classes_independent(g, sides));
    EXPECT_EQ(classes_complete(g, sides), n == 1);
    if (n == 2) {
      EXPECT_TRUE(classes_complete(complement(g), sides));
    }
  }
}

TEST(Verify, Examples) {
  const auto c4 = crown(4);
  const Layout fpp = crown_family::construct(variants::fpp, 4);
  EXPECT_TRUE(verify(c4.graph, fpp, variants::fpp));
  EXPECT_EQ(width(fpp), 5u);

  EXPECT_TRUE(verify(complete(3), Layout{{2, 0, 1}, {{0, 1, 2}}}, variants::compthin));

  const auto c3 = crown(3);
  const Verdict v = verify(c3.graph, crown3_thin_witness(c3.labeling), variants::indthin);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.violation, Violation::class_not_independent);
  EXPECT_EQ(v.class_index, std::optional<std::size_t>{0});
}

TEST(Verify, RejectsMalformedLayouts) {
  const Graph g = path(3);
  EXPECT_THROW(verify(g, Layout{{0, 1}, {{0, 1}}}, variants::thin), MalformedLayout);
  EXPECT_THROW(verify(g, Layout{{0, 1, 1}, {{0, 1, 2}}}, variants::thin), MalformedLayout);
  EXPECT_THROW(verify(g, Layout{{0, 1, 2}, {{0, 1}}}, variants::thin), MalformedLayout);
  EXPECT_THROW(verify(g, Layout{{0, 1, 2}, {{0, 1}, {1, 2}}}, variants::thin), MalformedLayout);
  EXPECT_THROW(verify(g, Layout{{0, 1, 2}, {{0, 1, 2}, {}}}, variants::thin), MalformedLayout);
  EXPECT_THROW(verify(g, Layout{{0, 1, 5}, {{0, 1, 5}}}, variants::thin), MalformedLayout);
}

TEST(Verify, AgreesWithNaiveVerifierForEveryVariant) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Graph g = oracle::random_graph_n(n, rng);
    Layout l = oracle::random_layout(n, 1 + trial % 4, rng);
    if (trial % 2 == 0) l = layout_from_sequence(l.classes);
    for (const auto& [name, spec] : variants::all)
      ASSERT_EQ(verify(g, l, spec).ok(), oracle::naive_verify(g, l, spec)) << name << " trial " << trial;
  }
}

TEST(Transforms, ReverseIsAnInvolution) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Layout l = oracle::random_layout(7, 3, rng);
    EXPECT_EQ(reverse(reverse(l)), l);
  }
  EXPECT_EQ(width(crown_family::construct(variants::thin, 5)), 4u);
}

TEST(Transforms, RestrictionIsHereditary) {
  std::mt19937_64 rng(21);
  const auto [g, lab] = crown(5);
  for (const auto& [name, spec] : variants::all) {
    const Layout l = crown_family::construct(spec, 5);
    ASSERT_TRUE(verify(g, l, spec));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vertex> keep;
      std::bernoulli_distribution coin(0.6);
      for (Vertex v = 0; v < g.size(); ++v)
        if (coin(rng)) keep.push_back(v);
      const auto sub = induced_subgraph(g, keep);
      const Layout r = restrict(l, keep);
      EXPECT_TRUE(verify(sub.graph, r, spec)) << name;
      EXPECT_LE(width(r), width(l));
    }
  }
}

TEST(Transforms, SingleClassConsistencyMatchesIntervalPatterns) {
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_graph(n, [&](const Graph& g) {
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), 0);
      do {
        const Layout l{order, {order}};
        ASSERT_EQ(is_consistent(g, l).ok(), coloring::verify_interval_order(g, order).ok());
        ASSERT_EQ(is_strongly_consistent(g, l).ok(), coloring::verify_proper_interval_order(g, order).ok());
      } while (std::next_permutation(order.begin(), order.end()));
    });
}
