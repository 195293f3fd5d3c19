#include "doctest.h"

#include "contrakt/contractibility.hpp"
#include "testutil.hpp"

using namespace contrakt;
using namespace testutil;

TEST_SUITE_BEGIN("contractibility");

TEST_CASE("identical graphs need no contractions") {
  auto g = complete_graph({"a", "b", "c"});
  auto r = solve_branching(g, g);
  CHECK(r.decision);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->empty());

  auto x = solve_xp(g, g);
  CHECK(x.decision);
  CHECK(x.certificate->empty());
}

TEST_CASE("P4 contracts to P3 in one step") {
  auto g = path_graph({"a", "b", "c", "d"});
  auto h = graph_of({{"a", "b"}, {"b", "d"}});
  // exhaustive check over all length-1 sequences first
  CHECK(oracle_seq_search(g, h, 1));

  for (auto r : {solve_branching(g, h), solve_xp(g, h)}) {
    CHECK(r.decision);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->size() == 1);
    CHECK(graph_equal(apply_sequence(g, *r.certificate), h));
  }
}

TEST_CASE("a forced edge cannot be deleted") {
  auto g = complete_graph({"a", "b", "c"});
  auto h = graph_of({}, {"a", "b"});
  CHECK_FALSE(oracle_seq_search(g, h, 1));
  CHECK_FALSE(solve_branching(g, h).decision);
  CHECK_FALSE(solve_xp(g, h).decision);
}

TEST_CASE("component counts are preserved") {
  auto g = graph_of({{"a", "b"}, {"c", "d"}});
  auto h = graph_of({{"a", "b"}}, {});  // one component
  CHECK_FALSE(solve_xp(g, h).decision);
  CHECK_FALSE(solve_branching(g, h).decision);
}

TEST_CASE("star loses two leaves into its center") {
  auto g = graph_of({{"x", "l1"}, {"x", "l2"}, {"x", "l3"}});
  auto h = graph_of({{"x", "l1"}});
  // hand enumeration: (x,l2) then (x,l3) erases both spare leaves
  CHECK(graph_equal(apply_sequence(g, {{"x", "l2"}, {"x", "l3"}}), h));
  CHECK(oracle_seq_search(g, h, 2));
  CHECK(solve_xp(g, h).decision);
  CHECK(solve_branching(g, h).decision);
}

TEST_CASE("xp rejects budgets beyond its cap") {
  std::vector<Label> big;
  for (int i = 0; i < 12; ++i) big.push_back(vlabel(i));
  auto g = complete_graph(big);
  auto h = graph_of({{"v0", "v1"}});
  CHECK_THROWS_AS(solve_xp(g, h, 8), BudgetTooLarge);
  CHECK_NOTHROW(solve_xp(g, h, 10));
}

TEST_CASE("h with vertices outside g is never a contraction") {
  auto g = path_graph({"a", "b"});
  auto h = path_graph({"a", "z"});
  CHECK_FALSE(solve_branching(g, h).decision);
  CHECK_FALSE(solve_xp(g, h).decision);
}

TEST_CASE("branching agrees with xp on random instances") {
  Rng rng(101);
  int yes = 0, no = 0;
  for (int it = 0; it < 400; ++it) {
    auto g = random_connected_graph(rng, rand_int(rng, 2, 7));
    auto [h0, s] = random_contraction_of(rng, g, rand_int(rng, 0, 3));
    auto h = rand_bool(rng, 0.5) ? perturb(rng, h0) : h0;
    BranchingOptions opt;
    opt.verify_branch_bound = true;
    auto rb = solve_branching(g, h, opt);
    auto rx = solve_xp(g, h);
    REQUIRE(rb.decision == rx.decision);
    CHECK(rb.stats.branch_bound_violations == 0);
    int k = g.vertex_count() - h.vertex_count();
    CHECK(rb.stats.max_depth <= std::max(0, k));
    if (rb.decision) {
      ++yes;
      CHECK(graph_equal(apply_sequence(g, *rb.certificate), h));
      CHECK(graph_equal(apply_sequence(g, *rx.certificate), h));
      CHECK(static_cast<int>(rb.certificate->size()) == k);
    } else {
      ++no;
    }
  }
  CHECK(yes > 50);
  CHECK(no > 50);
}

TEST_CASE("cache does not change decisions") {
  Rng rng(103);
  for (int it = 0; it < 120; ++it) {
    auto g = random_connected_graph(rng, rand_int(rng, 2, 6));
    auto [h0, s] = random_contraction_of(rng, g, rand_int(rng, 0, 2));
    auto h = rand_bool(rng, 0.5) ? perturb(rng, h0) : h0;
    BranchingOptions cached, plain;
    plain.use_cache = false;
    CHECK(solve_branching(g, h, cached).decision == solve_branching(g, h, plain).decision);
  }
}

TEST_CASE("exhaustive agreement on all connected 4-vertex graphs") {
  // every labeled connected graph on {v0..v3}, against every 1-contraction
  // image and a perturbed variant
  std::vector<std::pair<Label, Label>> all_pairs;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) all_pairs.emplace_back(vlabel(i), vlabel(j));
  }
  Rng rng(107);
  int cases = 0;
  for (unsigned mask = 0; mask < (1u << all_pairs.size()); ++mask) {
    GraphBuilder b;
    for (int i = 0; i < 4; ++i) b.add_vertex(vlabel(i));
    for (size_t e = 0; e < all_pairs.size(); ++e) {
      if (mask & (1u << e)) b.add_edge(all_pairs[e].first, all_pairs[e].second);
    }
    auto g = b.build();
    if (components(g).size() != 1) continue;
    for (const auto& c : all_contractions(g)) {
      auto h = contract(g, c);
      if (rand_bool(rng, 0.3)) h = perturb(rng, h);
      REQUIRE(solve_branching(g, h).decision == solve_xp(g, h).decision);
      ++cases;
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("solve_by_components") {
  auto inner = [](const LabeledGraph& a, const LabeledGraph& b) { return solve_xp(a, b); };

  SUBCASE("two independent instances combine") {
    auto g = union_graph(path_graph({"a", "b", "c", "d"}), path_graph({"p", "q", "r", "s"}));
    auto h = union_graph(graph_of({{"a", "b"}, {"b", "d"}}), graph_of({{"p", "q"}, {"q", "s"}}));
    auto r = solve_by_components(g, h, inner);
    CHECK(r.decision);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->size() == 2);
    CHECK(graph_equal(apply_sequence(g, *r.certificate), h));
  }

  SUBCASE("component count mismatch") {
    auto g = graph_of({{"a", "b"}, {"c", "d"}});
    auto h = graph_of({{"a", "b"}});
    CHECK_FALSE(solve_by_components(g, h, inner).decision);
  }

  SUBCASE("a g-component without h-vertices cannot vanish") {
    auto g = graph_of({{"a", "b"}, {"x", "y"}});
    auto h = graph_of({{"a", "b"}}, {"z"});
    CHECK_FALSE(solve_by_components(g, h, inner).decision);
  }

  SUBCASE("an h-component split across two g-components") {
    auto g = graph_of({{"a", "b"}, {"c", "d"}});
    auto h = graph_of({{"a", "c"}}, {"b"});
    CHECK_FALSE(solve_by_components(g, h, inner).decision);
  }

  SUBCASE("agrees with whole-graph solving on random disconnected inputs") {
    Rng rng(109);
    for (int it = 0; it < 60; ++it) {
      auto g1 = random_connected_graph(rng, rand_int(rng, 2, 4));
      GraphBuilder b2;
      b2.add_vertex("q0");
      for (int i = 1; i < rand_int(rng, 2, 4); ++i)
        b2.add_edge("q" + std::to_string(rand_int(rng, 0, i - 1)), "q" + std::to_string(i));
      auto g = union_graph(g1, b2.build());
      auto [h0, s] = random_contraction_of(rng, g, rand_int(rng, 0, 2));
      auto h = rand_bool(rng, 0.4) ? perturb(rng, h0) : h0;
      auto split = solve_by_components(g, h, inner);
      auto whole = solve_xp(g, h);
      CHECK(split.decision == whole.decision);
      if (split.decision) CHECK(graph_equal(apply_sequence(g, *split.certificate), h));
    }
  }
}

TEST_CASE("deterministic output") {
  Rng rng(113);
  auto g = random_connected_graph(rng, 7);
  auto [h, s] = random_contraction_of(rng, g, 2);
  auto a = solve_branching(g, h);
  auto b = solve_branching(g, h);
  REQUIRE(a.decision == b.decision);
  CHECK(*a.certificate == *b.certificate);
  CHECK(a.stats.nodes_explored == b.stats.nodes_explored);
}

TEST_SUITE_END();
