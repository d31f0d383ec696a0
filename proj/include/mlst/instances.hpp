#ifndef MLST_INSTANCES_HPP
#define MLST_INSTANCES_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlst/graph.hpp"
#include "mlst/label_subset.hpp"

namespace mlst {

enum class Family { g_prime, g1, g2, g3, random_b };

std::string family_name(Family f);

struct KnownOpt {
  int value;
  LabelSubset witness;
};

struct KnownLocalOpt {
  LabelSubset solution;
  std::string trapped_algorithm;
};

struct InstanceBundle {
  LabeledGraph graph;
  Family family;
  std::string name;
  std::map<std::string, long long> params;
  std::optional<KnownOpt> known_opt;
  std::vector<KnownLocalOpt> known_local_opts;
};

// Chain of polygon-plus-spokes blocks. a = number of optimal labels (the
// integer mu*k); requires 4 <= a and 2a < k. Global optimum uses labels
// 1..a, the chained polygons form the local optimum on labels a+1..k.
InstanceBundle gen_g_prime(int a, int k);

// Star on n = k nodes with distinct labels 1..k-1 plus a clique of label k
// over the non-center pairs. OPT = 2; the star tree is the ERA trap.
InstanceBundle gen_g1(int k);

// Instance on 2k-5 nodes and 4k-12 edges where {1..k-2} is a 2-switch
// local optimum and the unique optimum is {k-1, k}. The construction is
// self-verified before returning (see gen_g2 in instances.cpp).
InstanceBundle gen_g2(int k);

// Overlapping node groups whose greedy-misleading label classes drive the
// modified MVCA to its harmonic worst case; OPT = b!. Requires b >= 2.
InstanceBundle gen_g3(int b);

// Uniform random spanning tree plus random extra edges, labels assigned so
// that every label is used at least once and at most b times.
InstanceBundle gen_random_mlst_b(int n, int m, int k, int b, std::uint64_t seed);

// Text format: first data line "n k m", then m lines "u v label" (1-based).
// '#' starts a comment. save_instance writes canonically: edges sorted by
// (u,v), LF line endings.
LabeledGraph load_instance(const std::filesystem::path& path);
void save_instance(const LabeledGraph& g, const std::filesystem::path& path);

// Instance file plus a "<path>.meta" sidecar carrying family, params,
// known optimum and local optima.
void save_bundle(const InstanceBundle& bundle, const std::filesystem::path& path);
InstanceBundle load_bundle(const std::filesystem::path& path);

}  // namespace mlst

#endif
