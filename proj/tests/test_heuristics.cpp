#include "doctest.h"
#include "mlst/heuristics.hpp"
#include "mlst/instances.hpp"
#include "mlst/oracle.hpp"
#include "support.hpp"

using namespace mlst;

TEST_CASE("modified mvca hits the g3 worst case under lowest-index ties") {
  InstanceBundle g3 = gen_g3(2);
  CHECK(modified_mvca(g3.graph, {TieBreakKind::lowest_index}).to_string() == "111");
  // highest-index prefers the path labels and finds the optimum
  CHECK(modified_mvca(g3.graph, {TieBreakKind::highest_index}).to_string() == "011");
}

TEST_CASE("modified mvca on the single-edge graph") {
  LabeledGraph g = build_graph(2, 1, {{0, 1, 0}});
  CHECK(modified_mvca(g, {}).to_string() == "1");
  CHECK(mvca_with_contraction(g, {}).to_string() == "1");
}

TEST_CASE("contraction variant matches the plain greedy") {
  InstanceBundle g3 = gen_g3(2);
  CHECK(mvca_with_contraction(g3.graph, {TieBreakKind::lowest_index}).count() == 3);

  InstanceBundle g1 = gen_g1(5);
  LabelSubset via_contraction = mvca_with_contraction(g1.graph, {TieBreakKind::lowest_index});
  CHECK(via_contraction.count() == 2);
  CHECK(via_contraction == modified_mvca(g1.graph, {TieBreakKind::lowest_index}));

  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    InstanceBundle inst = test::random_instance(seed);
    for (TieBreakKind kind : {TieBreakKind::lowest_index, TieBreakKind::highest_index}) {
      LabelSubset a = modified_mvca(inst.graph, {kind});
      LabelSubset b = mvca_with_contraction(inst.graph, {kind});
      CHECK(is_feasible(inst.graph, a));
      CHECK(a.count() == b.count());
    }
  }
}

TEST_CASE("mvca respects the harmonic bound H_b * OPT") {
  // H_b as exact fractions: H_2 = 3/2, H_3 = 11/6, H_4 = 25/12
  auto harmonic = [](int b) {
    long long num = 0, den = 1;
    for (int i = 1; i <= b; ++i) {
      num = num * i + den;
      den *= i;
    }
    return std::pair(num, den);
  };
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    InstanceBundle inst = test::random_instance(seed, 12);
    if (inst.graph.k() > 14) continue;
    const int b = max_label_frequency(inst.graph);
    const int opt = brute_force_opt(inst.graph).opt_value;
    auto [num, den] = harmonic(b);
    for (TieBreakKind kind : {TieBreakKind::lowest_index, TieBreakKind::highest_index}) {
      LabelSubset sol = modified_mvca(inst.graph, {kind});
      CHECK(static_cast<long long>(sol.count()) * den <= num * opt);
    }
    LabelSubset random_tie = modified_mvca(inst.graph, {TieBreakKind::seeded_random, seed});
    CHECK(static_cast<long long>(random_tie.count()) * den <= num * opt);
  }
}

TEST_CASE("in_h_switch counts both set differences") {
  LabelSubset a = LabelSubset::from_string("111000");
  LabelSubset b = LabelSubset::from_string("100100");
  CHECK(in_h_switch(a, b, 2));       // removed 2, added 1
  LabelSubset c = LabelSubset::from_string("000111");
  CHECK_FALSE(in_h_switch(a, c, 2));  // removed 3
  CHECK(in_h_switch(a, a, 1));
  CHECK_THROWS_AS(in_h_switch(a, LabelSubset::from_string("10"), 1), Error);
}

TEST_CASE("2-switch local search is trapped on g2") {
  InstanceBundle g2 = gen_g2(10);
  LabelSubset trap = g2.known_local_opts.front().solution;
  CHECK(trap.to_string() == "1111111100");
  CHECK(local_search_2switch(g2.graph, trap, {}) == trap);
  CHECK(is_h_switch_local_optimum(g2.graph, trap, 2));
}

TEST_CASE("2-switch local search reduces g1 from all labels") {
  InstanceBundle g1 = gen_g1(5);
  LabelSubset result = local_search_2switch(g1.graph, LabelSubset::ones(5), {});
  CHECK(result.count() <= 3);
  CHECK(is_feasible(g1.graph, result));
  CHECK(is_h_switch_local_optimum(g1.graph, result, 2));
}

TEST_CASE("2-switch local search handles the trivial instance and bad input") {
  LabeledGraph g = build_graph(2, 1, {{0, 1, 0}});
  CHECK(local_search_2switch(g, LabelSubset::ones(1), {}).to_string() == "1");
  InstanceBundle g1 = gen_g1(5);
  CHECK_THROWS_AS(local_search_2switch(g1.graph, LabelSubset::zeros(5), {}), Error);
  CHECK_THROWS_AS(is_h_switch_local_optimum(g1.graph, LabelSubset::zeros(5), 2), Error);
}

TEST_CASE("local optimum predicate on the named examples") {
  InstanceBundle g1 = gen_g1(5);
  CHECK(is_h_switch_local_optimum(g1.graph, LabelSubset::from_string("00101"), 2));
  CHECK_FALSE(is_h_switch_local_optimum(g1.graph, LabelSubset::ones(5), 2));
}

TEST_CASE("every 2-switch result is locally optimal on random instances") {
  for (std::uint64_t seed = 400; seed < 415; ++seed) {
    InstanceBundle inst = test::random_instance(seed, 10);
    if (inst.graph.k() > 12) continue;
    LabelSubset result = local_search_2switch(inst.graph, LabelSubset::ones(inst.graph.k()), {});
    CHECK(is_feasible(inst.graph, result));
    CHECK(is_h_switch_local_optimum(inst.graph, result, 2));
  }
}

TEST_CASE("2-switch results respect the (b+1)/2 bound when b >= 2") {
  for (std::uint64_t seed = 500; seed < 540; ++seed) {
    InstanceBundle inst = test::random_instance(seed, 10);
    if (inst.graph.k() > 14) continue;
    const int b = max_label_frequency(inst.graph);
    if (b < 2) continue;
    const int opt = brute_force_opt(inst.graph).opt_value;
    LabelSubset result = local_search_2switch(inst.graph, LabelSubset::ones(inst.graph.k()), {});
    CHECK(result.count() <= (opt * (b + 1) + 1) / 2);  // ceil(opt*(b+1)/2)
  }
}

TEST_CASE("era is trapped on the g1 star tree") {
  for (int k : {5, 10}) {
    InstanceBundle g1 = gen_g1(k);
    SpanningTree star = tree_from_subset(g1.graph, g1.known_local_opts.front().solution);
    LabelSubset result = era(g1.graph, star, {});
    CHECK(result.count() == k - 1);
    CHECK(result == g1.known_local_opts.front().solution);
  }
}

TEST_CASE("era leaves an optimal tree unchanged") {
  InstanceBundle g1 = gen_g1(5);
  SpanningTree tree = tree_from_subset(g1.graph, LabelSubset::from_string("00101"));
  CHECK(era(g1.graph, tree, {}).to_string() == "00101");

  LabeledGraph single = build_graph(2, 1, {{0, 1, 0}});
  CHECK(era(single, tree_from_subset(single, LabelSubset::ones(1)), {}).to_string() == "1");
}

TEST_CASE("era rejects invalid trees and never grows the label set") {
  InstanceBundle g1 = gen_g1(5);
  SpanningTree bad;
  bad.edge_indices = {0, 1, 2};
  CHECK_THROWS_AS(era(g1.graph, bad, {}), Error);
  SpanningTree cyclic;
  cyclic.edge_indices = {4, 5, 7, 4};
  CHECK_THROWS_AS(era(g1.graph, cyclic, {}), Error);

  for (std::uint64_t seed = 600; seed < 620; ++seed) {
    InstanceBundle inst = test::random_instance(seed);
    SpanningTree tree = tree_from_subset(inst.graph, LabelSubset::ones(inst.graph.k()));
    LabelSubset before = tree_labels(inst.graph, tree);
    LabelSubset after = era(inst.graph, tree, {});
    CHECK(after.count() <= before.count());
    CHECK(is_feasible(inst.graph, after));
  }
}

TEST_CASE("tree_from_subset needs a feasible subset") {
  InstanceBundle g3 = gen_g3(2);
  CHECK_THROWS_AS(tree_from_subset(g3.graph, LabelSubset::from_string("100")), Error);
}

TEST_CASE("random spanning trees are valid and seed-deterministic") {
  InstanceBundle g1 = gen_g1(8);
  Rng a(5), b(5), c(6);
  SpanningTree ta = random_spanning_tree(g1.graph, a);
  SpanningTree tb = random_spanning_tree(g1.graph, b);
  SpanningTree tc = random_spanning_tree(g1.graph, c);
  CHECK(ta.edge_indices == tb.edge_indices);
  CHECK(ta.edge_indices != tc.edge_indices);
  CHECK(static_cast<int>(ta.edge_indices.size()) == g1.graph.n() - 1);
  CHECK(is_feasible(g1.graph, tree_labels(g1.graph, ta)));
  // era accepts it as a start
  era(g1.graph, ta, {});
}
