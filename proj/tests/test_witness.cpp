#include "doctest.h"

#include "contrakt/contractibility.hpp"
#include "contrakt/witness.hpp"
#include "testutil.hpp"

using namespace contrakt;
using namespace testutil;

namespace {

WitnessStructure singleton_witness(const LabeledGraph& g) {
  WitnessStructure w;
  for (const auto& v : g.labels()) w.blocks.push_back({v, {v}});
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("witness");

TEST_CASE("validate_witness base cases") {
  auto g = path_graph({"a", "b", "c"});

  SUBCASE("identity witness") { CHECK(validate_witness(g, g, singleton_witness(g))); }

  SUBCASE("single contraction") {
    auto h = graph_of({{"a", "c"}});
    WitnessStructure w{{{"a", {"a"}}, {"c", {"b", "c"}}}};
    CHECK(validate_witness(g, h, w));
  }

  SUBCASE("missing target edge fails condition (c)") {
    auto h = graph_of({}, {"a", "c"});
    WitnessStructure w{{{"a", {"a"}}, {"c", {"b", "c"}}}};
    CHECK_FALSE(validate_witness(g, h, w));
  }

  SUBCASE("disconnected block fails condition (a)") {
    auto p4 = path_graph({"a", "b", "c", "d"});
    auto h = graph_of({{"a", "b"}, {"b", "d"}});
    WitnessStructure w{{{"a", {"a"}}, {"b", {"b"}}, {"d", {"c", "d"}}}};
    CHECK(validate_witness(p4, h, w));
    WitnessStructure bad{{{"a", {"a", "c"}}, {"b", {"b"}}, {"d", {"d"}}}};
    CHECK_FALSE(validate_witness(p4, h, bad));
  }

  SUBCASE("adjacent blocks without a target edge fail condition (c)") {
    auto h = graph_of({}, {"a", "b"});
    WitnessStructure w{{{"a", {"a"}}, {"b", {"b", "c"}}}};
    CHECK_FALSE(validate_witness(g, h, w));
  }
}

TEST_CASE("validate_witness distinguishes malformed partitions") {
  auto g = path_graph({"a", "b", "c"});
  auto h = graph_of({{"a", "c"}});

  // not covering V(g)
  CHECK_THROWS_AS(validate_witness(g, h, {{{"a", {"a"}}, {"c", {"c"}}}}), NotAPartition);
  // overlapping blocks
  CHECK_THROWS_AS(validate_witness(g, h, {{{"a", {"a", "b"}}, {"c", {"b", "c"}}}}),
                  NotAPartition);
  // representative outside its block
  CHECK_THROWS_AS(validate_witness(g, h, {{{"a", {"b"}}, {"c", {"a", "c"}}}}), NotAPartition);
  // representative not a vertex of h
  CHECK_THROWS_AS(validate_witness(g, h, {{{"b", {"a", "b"}}, {"c", {"c"}}}}), NotAPartition);
  // wrong block count
  CHECK_THROWS_AS(validate_witness(g, h, {{{"a", {"a", "b", "c"}}}}), NotAPartition);
  // empty block
  CHECK_THROWS_AS(validate_witness(g, h, {{{"a", {"a", "b", "c"}}, {"c", {}}}}), NotAPartition);
}

TEST_CASE("witness_to_sequence realizes the partition") {
  SUBCASE("all singleton blocks -> empty sequence") {
    auto g = complete_graph({"a", "b", "c"});
    CHECK(witness_to_sequence(g, singleton_witness(g)).empty());
  }

  SUBCASE("triangle block contracts with two steps") {
    auto g = graph_of({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
    WitnessStructure w{{{"a", {"a", "b", "c"}}, {"d", {"d"}}}};
    auto s = witness_to_sequence(g, w);
    CHECK(s.size() == 2);  // sum of (|block| - 1)
    CHECK(graph_equal(apply_sequence(g, s), graph_of({{"a", "d"}})));
  }

  SUBCASE("P4 two-block witness, checked against exhaustive 2-step search") {
    auto g = path_graph({"a", "b", "c", "d"});
    WitnessStructure w{{{"a", {"a", "b"}}, {"d", {"c", "d"}}}};
    auto s = witness_to_sequence(g, w);
    REQUIRE(s.size() == 2);
    auto target = graph_of({{"a", "d"}});
    CHECK(graph_equal(apply_sequence(g, s), target));
    // the exhaustive enumeration agrees the target is reachable in 2 steps
    CHECK(oracle_seq_search(g, target, 2));
  }

  SUBCASE("invalid witness is rejected") {
    auto g = path_graph({"a", "b", "c"});
    CHECK_THROWS_AS(witness_to_sequence(g, {{{"a", {"a", "c"}}, {"b", {"b"}}}}),
                    InvalidWitness);
    CHECK_THROWS_AS(witness_to_sequence(g, {{{"a", {"a"}}}}), InvalidWitness);
  }
}

TEST_CASE("sequence_to_witness folds the sequence") {
  auto p3 = path_graph({"a", "b", "c"});

  SUBCASE("empty sequence -> singletons") {
    auto w = sequence_to_witness(p3, {});
    CHECK(w.blocks.size() == 3);
    for (const auto& blk : w.blocks) CHECK(blk.members.size() == 1);
  }

  SUBCASE("single step") {
    auto w = sequence_to_witness(p3, {{"a", "b"}});
    REQUIRE(w.blocks.size() == 2);
    CHECK(w.blocks[0].representative == "a");
    CHECK(w.blocks[0].members == std::set<Label>{"a", "b"});
    CHECK(w.blocks[1].members == std::set<Label>{"c"});
  }

  SUBCASE("two steps into one block") {
    auto p4 = path_graph({"a", "b", "c", "d"});
    auto w = sequence_to_witness(p4, {{"b", "a"}, {"b", "c"}});
    REQUIRE(w.blocks.size() == 2);
    CHECK(w.blocks[0].representative == "b");
    CHECK(w.blocks[0].members == std::set<Label>{"a", "b", "c"});
    CHECK(w.blocks[1].members == std::set<Label>{"d"});
  }

  SUBCASE("validates against the applied graph") {
    Rng rng(41);
    for (int it = 0; it < 40; ++it) {
      auto g = random_connected_graph(rng, rand_int(rng, 2, 7));
      auto [h, s] = random_contraction_of(rng, g, rand_int(rng, 0, 3));
      auto w = sequence_to_witness(g, s);
      CHECK(validate_witness(g, h, w));
    }
  }
}

TEST_CASE("round trip keeps length and result") {
  Rng rng(43);
  for (int it = 0; it < 40; ++it) {
    auto g = random_connected_graph(rng, rand_int(rng, 2, 7));
    auto [h, s] = random_contraction_of(rng, g, rand_int(rng, 0, 3));
    auto w = sequence_to_witness(g, s);
    auto s2 = witness_to_sequence(g, w);
    CHECK(s2.size() == s.size());
    CHECK(graph_equal(apply_sequence(g, s2), h));
  }
}

TEST_CASE("witness existence matches sequence search on small instances") {
  Rng rng(47);
  int yes = 0, no = 0;
  for (int it = 0; it < 60; ++it) {
    auto g = random_connected_graph(rng, rand_int(rng, 2, 6));
    auto [h0, s] = random_contraction_of(rng, g, rand_int(rng, 0, 2));
    auto h = rand_bool(rng, 0.4) ? perturb(rng, h0) : h0;
    bool via_witness = find_witness_exhaustive(g, h).has_value();
    bool via_sequences = oracle_contractible(g, h);
    CHECK(via_witness == via_sequences);
    (via_witness ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("in-block contractions commute to the front") {
  Rng rng(53);
  int checked = 0;
  for (int it = 0; it < 60 && checked < 25; ++it) {
    auto g = random_connected_graph(rng, rand_int(rng, 3, 6));
    auto [h, s] = random_contraction_of(rng, g, rand_int(rng, 1, 2));
    auto w = sequence_to_witness(g, s);
    REQUIRE(validate_witness(g, h, w));
    for (const auto& blk : w.blocks) {
      for (const auto& u : blk.members) {
        for (const auto& v : blk.members) {
          if (v == blk.representative || u == v || !g.has_edge(u, v)) continue;
          auto r = solve_branching(contract(g, {u, v}), h);
          CHECK(r.decision);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("contract_matching_first") {
  auto p4 = path_graph({"a", "b", "c", "d"});
  WitnessStructure w{{{"a", {"a", "b"}}, {"d", {"c", "d"}}}};

  SUBCASE("empty matching leaves g unchanged") {
    CHECK(graph_equal(contract_matching_first(p4, w, {}), p4));
  }

  SUBCASE("single in-block edge equals plain contract") {
    auto r = contract_matching_first(p4, w, {{"a", "b"}});
    CHECK(graph_equal(r, contract(p4, {"a", "b"})));
  }

  SUBCASE("two disjoint in-block edges, target still reachable") {
    auto r = contract_matching_first(p4, w, {{"a", "b"}, {"d", "c"}});
    CHECK(r.vertex_count() == 2);
    auto target = graph_of({{"a", "d"}});
    CHECK(solve_branching(r, target).decision);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(contract_matching_first(p4, w, {{"a", "b"}, {"b", "c"}}), NotAMatching);
    CHECK_THROWS_AS(contract_matching_first(p4, w, {{"b", "c"}}), CrossesBlocks);
    CHECK_THROWS_AS(contract_matching_first(p4, w, {{"b", "a"}}), RemovesRepresentative);
    CHECK_THROWS_AS(contract_matching_first(p4, w, {{"a", "c"}}), NotAMatching);
  }
}

TEST_CASE("find_witness_exhaustive caps its input size") {
  Rng rng(59);
  auto g = random_connected_graph(rng, 9);
  CHECK_THROWS_AS(find_witness_exhaustive(g, path_graph({"v0", "v1"}), 8), TooLarge);
}

TEST_SUITE_END();
