#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mlst/heuristics.hpp"
#include "mlst/instances.hpp"
#include "mlst/oracle.hpp"
#include "support.hpp"

using namespace mlst;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

bool graphs_equal(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.m() != b.m()) return false;
  auto canon = [](const LabeledGraph& g) {
    std::vector<std::tuple<int, int, int>> edges;
    for (const Edge& e : g.edges())
      edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.label});
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  return canon(a) == canon(b);
}

}  // namespace

TEST_CASE("g-prime counts, optimum, and both named solutions") {
  InstanceBundle gp = gen_g_prime(4, 12);
  CHECK(gp.graph.n() == 32);  // a * (k - a)
  CHECK(gp.graph.k() == 12);
  REQUIRE(gp.known_opt.has_value());
  CHECK(gp.known_opt->value == 4);
  CHECK(gp.known_opt->witness.to_string() == "111100000000");
  CHECK(is_feasible(gp.graph, gp.known_opt->witness));
  REQUIRE(gp.known_local_opts.size() == 1);
  CHECK(gp.known_local_opts[0].solution.to_string() == "000011111111");
  CHECK(is_feasible(gp.graph, gp.known_local_opts[0].solution));
  CHECK(brute_force_opt(gp.graph).opt_value == 4);
}

TEST_CASE("g-prime rejects out-of-range parameters") {
  CHECK_THROWS_AS(gen_g_prime(3, 12), Error);
  CHECK_THROWS_AS(gen_g_prime(6, 12), Error);  // needs 2a < k
}

TEST_CASE("g1 counts and frequencies") {
  InstanceBundle g1 = gen_g1(5);
  CHECK(g1.graph.n() == 5);
  CHECK(g1.graph.m() == 10);  // n(n-1)/2
  CHECK(max_label_frequency(g1.graph) == 6);  // (k-1)(k-2)/2 on label k
  CHECK(brute_force_opt(g1.graph).opt_value == 2);
  CHECK(gen_g1(3).graph.m() == 3);
  CHECK_THROWS_AS(gen_g1(2), Error);
}

TEST_CASE("g2 counts and verified properties") {
  InstanceBundle g2 = gen_g2(10);
  CHECK(g2.graph.n() == 15);  // 2k-5
  CHECK(g2.graph.m() == 28);  // 4k-12
  OracleResult res = brute_force_opt(g2.graph);
  CHECK(res.opt_value == 2);
  CHECK(res.witness.to_string() == "0000000011");
  LabelSubset trap = g2.known_local_opts.front().solution;
  CHECK(local_search_2switch(g2.graph, trap, {}) == trap);
  CHECK_THROWS_AS(gen_g2(6), Error);
}

TEST_CASE("g2 verifies across the small k range") {
  for (int k = 7; k <= 12; ++k) {
    InstanceBundle g2 = gen_g2(k);
    CHECK(g2.graph.n() == 2 * k - 5);
    CHECK(g2.graph.m() == 4 * k - 12);
  }
}

TEST_CASE("g3 counts, optimum, and structure") {
  InstanceBundle b2 = gen_g3(2);
  CHECK(b2.graph.n() == 5);
  CHECK(b2.graph.k() == 3);
  CHECK(b2.graph.m() == 6);
  CHECK(b2.known_opt->value == 2);

  InstanceBundle b3 = gen_g3(3);
  CHECK(b3.graph.n() == 19);
  CHECK(b3.graph.k() == 11);
  CHECK(b3.known_opt->value == 6);
  CHECK(brute_force_opt(b3.graph).opt_value == 6);
  CHECK(max_label_frequency(b3.graph) == 3);

  InstanceBundle b4 = gen_g3(4);
  CHECK(b4.graph.n() == 97);
  CHECK(b4.graph.k() == 50);  // (12+8+6) + 24
  CHECK(max_label_frequency(b4.graph) == 4);

  // the optimal labels alone form a Hamiltonian path
  SpanningTree path = tree_from_subset(b3.graph, b3.known_opt->witness);
  CHECK(static_cast<int>(path.edge_indices.size()) == b3.graph.n() - 1);
  LabelSubset opt_edges_only = b3.known_opt->witness;
  int edge_count = 0;
  for (const Edge& e : b3.graph.edges())
    if (opt_edges_only.test(e.label)) ++edge_count;
  CHECK(edge_count == b3.graph.n() - 1);

  CHECK_THROWS_AS(gen_g3(1), Error);
}

TEST_CASE("generated bundles match the oracle whenever enumerable") {
  for (const InstanceBundle& bundle :
       {gen_g1(6), gen_g2(8), gen_g3(2), gen_g3(3), gen_g_prime(4, 12), gen_g_prime(4, 13)}) {
    REQUIRE(bundle.known_opt.has_value());
    CHECK(is_feasible(bundle.graph, bundle.known_opt->witness));
    CHECK(bundle.known_opt->witness.count() == bundle.known_opt->value);
    CHECK(brute_force_opt(bundle.graph).opt_value == bundle.known_opt->value);
    for (const KnownLocalOpt& lo : bundle.known_local_opts) CHECK(is_feasible(bundle.graph, lo.solution));
  }
}

TEST_CASE("random instances satisfy their advertised constraints") {
  InstanceBundle r = gen_random_mlst_b(8, 12, 10, 2, 7);
  CHECK(r.graph.n() == 8);
  CHECK(r.graph.m() == 12);
  CHECK(r.graph.k() == 10);
  CHECK(max_label_frequency(r.graph) <= 2);

  InstanceBundle single = gen_random_mlst_b(2, 1, 1, 1, 0);
  CHECK(single.graph.m() == 1);

  CHECK_THROWS_AS(gen_random_mlst_b(5, 10, 2, 3, 0), Error);  // 2*3 < 10
  CHECK_THROWS_AS(gen_random_mlst_b(5, 3, 2, 3, 0), Error);   // m < n-1
  CHECK_THROWS_AS(gen_random_mlst_b(5, 11, 4, 4, 0), Error);  // m > n(n-1)/2

  // determinism and seed sensitivity
  CHECK(graphs_equal(gen_random_mlst_b(8, 12, 10, 2, 7).graph, r.graph));
  CHECK_FALSE(graphs_equal(gen_random_mlst_b(8, 12, 10, 2, 8).graph, r.graph));
}

TEST_CASE("instance files round-trip through save and load") {
  for (const InstanceBundle& bundle : {gen_g1(5), gen_g3(3), gen_random_mlst_b(9, 14, 6, 4, 3)}) {
    auto path = temp_file("roundtrip.mlst");
    save_instance(bundle.graph, path);
    CHECK(graphs_equal(load_instance(path), bundle.graph));
  }
}

TEST_CASE("the shipped g3 fixture loads with the documented counts") {
  LabeledGraph g = load_instance(std::filesystem::path(MLST_TEST_DIR) / "fixtures/g3_b2.mlst");
  CHECK(g.n() == 5);
  CHECK(g.k() == 3);
  CHECK(g.m() == 6);
  CHECK(graphs_equal(g, gen_g3(2).graph));
}

TEST_CASE("parser reports the offending line") {
  auto path = temp_file("bad.mlst");
  {
    std::ofstream out(path);
    out << "# comment\n3 2 2\n1 2 1\n1 2\n";
  }
  try {
    load_instance(path);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::parse_error);
    CHECK(std::string(err.what()).find("line 4") != std::string::npos);
  }

  {
    std::ofstream out(path);
    out << "2 1\n1 2 1\n";
  }
  CHECK_THROWS_AS(load_instance(path), Error);
  {
    std::ofstream out(path);
    out << "2 1 1\n1 2 1\n1 2 1\n";  // extra line
  }
  CHECK_THROWS_AS(load_instance(path), Error);
  CHECK_THROWS_AS(load_instance(temp_file("does_not_exist.mlst")), Error);
}

TEST_CASE("bundle metadata survives the sidecar round trip") {
  InstanceBundle g2 = gen_g2(9);
  auto path = temp_file("bundle.mlst");
  save_bundle(g2, path);
  InstanceBundle loaded = load_bundle(path);
  CHECK(loaded.family == Family::g2);
  CHECK(loaded.name == g2.name);
  CHECK(loaded.params.at("k") == 9);
  REQUIRE(loaded.known_opt.has_value());
  CHECK(loaded.known_opt->value == 2);
  CHECK(loaded.known_opt->witness == g2.known_opt->witness);
  REQUIRE(loaded.known_local_opts.size() == 1);
  CHECK(loaded.known_local_opts[0].solution == g2.known_local_opts[0].solution);
  CHECK(loaded.known_local_opts[0].trapped_algorithm == "ls-2switch");
}
