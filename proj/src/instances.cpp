#include "mlst/instances.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "mlst/heuristics.hpp"
#include "mlst/rng.hpp"

namespace mlst {

std::string family_name(Family f) {
  switch (f) {
    case Family::g_prime: return "g-prime";
    case Family::g1: return "g1";
    case Family::g2: return "g2";
    case Family::g3: return "g3";
    case Family::random_b: return "random-b";
  }
  return "?";
}

namespace {

std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::g_prime, Family::g1, Family::g2, Family::g3, Family::random_b})
    if (family_name(f) == s) return f;
  return std::nullopt;
}

LabelSubset index_range_subset(int k, int first, int last) {  // [first, last] inclusive
  LabelSubset s(k);
  for (int i = first; i <= last; ++i) s.set(i);
  return s;
}

}  // namespace

InstanceBundle gen_g_prime(int a, int k) {
  if (a < 4) fail(Errc::param_out_of_range, "g-prime needs a >= 4, got a = " + std::to_string(a));
  if (2 * a >= k) fail(Errc::param_out_of_range, "g-prime needs 2a < k, got a = " + std::to_string(a) +
                                                     ", k = " + std::to_string(k));
  const int blocks = k - a;       // one polygon-plus-spokes block per non-optimal label
  const int ring = a - 1;         // polygon size, also the spoke count
  auto outer = [&](int b, int j) { return b * a + j; };  // j in [0, ring); outer(b, 0) is the block's v1
  auto inner = [&](int b) { return b * a + ring; };

  std::vector<Edge> edges;
  for (int b = 0; b < blocks; ++b) {
    const int polygon_label = a + b;  // last block carries label k
    for (int j = 0; j < ring; ++j) edges.push_back({outer(b, j), outer(b, (j + 1) % ring), polygon_label});
    for (int j = 0; j < ring; ++j) edges.push_back({inner(b), outer(b, j), j});
  }
  for (int b = 0; b + 1 < blocks; ++b) {
    edges.push_back({inner(b), outer(b + 1, 0), a + b});
    edges.push_back({outer(b, 0), outer(b + 1, 0), a + b});
    edges.push_back({inner(b), inner(b + 1), a - 1});
  }
  edges.push_back({inner(blocks - 1), outer(0, 0), k - 1});

  InstanceBundle bundle{LabeledGraph::build(a * blocks, k, std::move(edges)),
                        Family::g_prime,
                        "g-prime-a" + std::to_string(a) + "-k" + std::to_string(k),
                        {{"a", a}, {"k", k}},
                        KnownOpt{a, index_range_subset(k, 0, a - 1)},
                        {{index_range_subset(k, a, k - 1), "1+1-ea/2-switch"}}};
  return bundle;
}

InstanceBundle gen_g1(int k) {
  if (k < 3) fail(Errc::param_out_of_range, "g1 needs k >= 3, got k = " + std::to_string(k));
  const int n = k;
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) edges.push_back({0, j, j - 1});
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, k - 1});

  InstanceBundle bundle{LabeledGraph::build(n, k, std::move(edges)),
                        Family::g1,
                        "g1-k" + std::to_string(k),
                        {{"k", k}},
                        KnownOpt{2, LabelSubset::of(k, {0, k - 1})},
                        {{index_range_subset(k, 0, k - 2), "era"}}};
  return bundle;
}

InstanceBundle gen_g2(int k) {
  if (k < 7) fail(Errc::param_out_of_range, "g2 needs k >= 7, got k = " + std::to_string(k));
  const int q = k - 3;
  const int v0 = 0;
  auto x_node = [&](int t) { return 1 + t; };
  auto y_node = [&](int t) { return 1 + q + t; };

  // Spanning tree on labels 1..k-2 (0-based 0..k-3): two stars around x_0
  // whose leaf pairs (x_t, y_t) share label t-1, plus the two single-edge
  // labels attaching v0 and closing the x_1 side.
  std::vector<Edge> edges;
  edges.push_back({v0, y_node(0), q - 1});
  edges.push_back({y_node(0), x_node(1), q});
  for (int t = 1; t < q; ++t) {
    edges.push_back({x_node(t), x_node(0), t - 1});
    edges.push_back({y_node(t), x_node(0), t - 1});
  }
  // label k-1: star from v0 over all x nodes; label k: the x-y matching
  for (int t = 0; t < q; ++t) edges.push_back({v0, x_node(t), k - 2});
  for (int t = 0; t < q; ++t) edges.push_back({x_node(t), y_node(t), k - 1});

  LabeledGraph g = LabeledGraph::build(2 * q + 1, k, std::move(edges));

  const LabelSubset optimum = LabelSubset::of(k, {k - 2, k - 1});
  const LabelSubset trap = index_range_subset(k, 0, k - 3);

  // (i) OPT = 2 with the unique witness {k-1, k}
  for (int l = 0; l < k; ++l)
    if (is_feasible(g, LabelSubset::of(k, {l})))
      fail(Errc::construction_verification_failed, "single label " + std::to_string(l + 1) + " spans g2");
  for (int l1 = 0; l1 < k; ++l1)
    for (int l2 = l1 + 1; l2 < k; ++l2) {
      LabelSubset pair = LabelSubset::of(k, {l1, l2});
      if (is_feasible(g, pair) != (pair == optimum))
        fail(Errc::construction_verification_failed,
             "label pair {" + std::to_string(l1 + 1) + "," + std::to_string(l2 + 1) + "} breaks the g2 optimum");
    }
  // (ii) the trap subset spans
  if (!is_feasible(g, trap))
    fail(Errc::construction_verification_failed, "subset {1..k-2} does not span g2");
  // (iii) and is a 2-switch local optimum
  if (!is_h_switch_local_optimum(g, trap, 2))
    fail(Errc::construction_verification_failed, "subset {1..k-2} is not a 2-switch local optimum of g2");

  InstanceBundle bundle{std::move(g),
                        Family::g2,
                        "g2-k" + std::to_string(k),
                        {{"k", k}},
                        KnownOpt{2, optimum},
                        {{trap, "ls-2switch"}}};
  return bundle;
}

InstanceBundle gen_g3(int b) {
  if (b < 2) fail(Errc::param_out_of_range, "g3 needs b >= 2, got b = " + std::to_string(b));
  if (b > 8) fail(Errc::param_out_of_range, "g3 with b > 8 exceeds the node budget");
  long long fact = 1;
  for (int i = 2; i <= b; ++i) fact *= i;
  const int groups = static_cast<int>(fact);
  const int n = b * groups + 1;

  int shortcut_labels = 0;  // sum over h of b!/h
  for (int h = 2; h <= b; ++h) shortcut_labels += groups / h;
  const int k = shortcut_labels + groups;

  std::vector<Edge> edges;
  // L_h classes, h = b down to 2: edge (group start, start + h) per group,
  // consecutive blocks of h edges sharing one label.
  int label_base = 0;
  for (int h = b; h >= 2; --h) {
    for (int j = 0; j < groups; ++j) edges.push_back({j * b, j * b + h, label_base + j / h});
    label_base += groups / h;
  }
  // L_opt: the Hamiltonian path, one label per group.
  for (int j = 0; j < groups; ++j)
    for (int s = 0; s < b; ++s) edges.push_back({j * b + s, j * b + s + 1, label_base + j});

  InstanceBundle bundle{LabeledGraph::build(n, k, std::move(edges)),
                        Family::g3,
                        "g3-b" + std::to_string(b),
                        {{"b", b}},
                        KnownOpt{groups, index_range_subset(k, shortcut_labels, k - 1)},
                        {}};
  return bundle;
}

InstanceBundle gen_random_mlst_b(int n, int m, int k, int b, std::uint64_t seed) {
  if (n < 2) fail(Errc::infeasible_params, "need n >= 2, got n = " + std::to_string(n));
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges)
    fail(Errc::infeasible_params, "m = " + std::to_string(m) + " outside [n-1, n(n-1)/2]");
  if (k < 1 || k > m) fail(Errc::infeasible_params, "k = " + std::to_string(k) + " outside [1, m]");
  if (b < 1 || static_cast<long long>(k) * b < m)
    fail(Errc::infeasible_params,
         "label capacity k*b = " + std::to_string(static_cast<long long>(k) * b) + " below m = " + std::to_string(m));

  Rng rng(seed);

  // Uniform spanning tree via a random Pruefer sequence.
  std::vector<Edge> edges;
  {
    std::vector<int> pruefer(n >= 2 ? n - 2 : 0);
    for (int& p : pruefer) p = static_cast<int>(rng.below(n));
    std::vector<int> degree(n, 1);
    for (int p : pruefer) ++degree[p];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (int p : pruefer) {
      int leaf = leaves.top();
      leaves.pop();
      edges.push_back({leaf, p, 0});
      if (--degree[p] == 1) leaves.push(p);
    }
    int u = leaves.top();
    leaves.pop();
    edges.push_back({u, leaves.top(), 0});
  }

  // Extra edges: shuffle all remaining pairs and take a prefix.
  if (m > n - 1) {
    std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : edges) {
      used[static_cast<std::size_t>(e.u) * n + e.v] = 1;
      used[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    }
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!used[static_cast<std::size_t>(u) * n + v]) pool.push_back({u, v});
    for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i)
      std::swap(pool[i], pool[static_cast<int>(rng.below(i + 1))]);
    for (int i = 0; i < m - (n - 1); ++i) edges.push_back({pool[i].first, pool[i].second, 0});
  }

  // Labels: a shuffled prefix guarantees every label once, the rest draw
  // uniformly among labels with remaining capacity.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  for (int i = m - 1; i > 0; --i) std::swap(order[i], order[static_cast<int>(rng.below(i + 1))]);
  std::vector<int> load(k, 0);
  for (int i = 0; i < k; ++i) {
    edges[order[i]].label = i;
    load[i] = 1;
  }
  for (int i = k; i < m; ++i) {
    std::vector<int> open;
    for (int l = 0; l < k; ++l)
      if (load[l] < b) open.push_back(l);
    int l = open[static_cast<int>(rng.below(open.size()))];
    edges[order[i]].label = l;
    ++load[l];
  }

  InstanceBundle bundle{LabeledGraph::build(n, k, std::move(edges)),
                        Family::random_b,
                        "random-n" + std::to_string(n) + "-m" + std::to_string(m) + "-k" + std::to_string(k) +
                            "-b" + std::to_string(b) + "-s" + std::to_string(seed),
                        {{"n", n}, {"m", m}, {"k", k}, {"b", b}, {"seed", static_cast<long long>(seed)}},
                        std::nullopt,
                        {}};
  return bundle;
}

namespace {

struct ParsedLine {
  int number;
  std::vector<std::string> tokens;
};

std::vector<ParsedLine> tokenize_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());
  std::vector<ParsedLine> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    ParsedLine line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(Errc::parse_error, "line " + std::to_string(line) + ": '" + tok + "' is not an integer");
  return value;
}

}  // namespace

LabeledGraph load_instance(const std::filesystem::path& path) {
  const auto lines = tokenize_file(path);
  if (lines.empty()) fail(Errc::parse_error, "line 1: missing 'n k m' header");
  const ParsedLine& header = lines[0];
  if (header.tokens.size() != 3)
    fail(Errc::parse_error, "line " + std::to_string(header.number) + ": header must be 'n k m'");
  const int n = static_cast<int>(parse_int(header.tokens[0], header.number));
  const int k = static_cast<int>(parse_int(header.tokens[1], header.number));
  const long long m = parse_int(header.tokens[2], header.number);

  if (static_cast<long long>(lines.size()) - 1 < m) {
    fail(Errc::parse_error, "line " + std::to_string(lines.back().number) + ": expected " + std::to_string(m) +
                                " edges, found " + std::to_string(lines.size() - 1));
  }
  if (static_cast<long long>(lines.size()) - 1 > m)
    fail(Errc::parse_error, "line " + std::to_string(lines[static_cast<std::size_t>(m) + 1].number) +
                                ": extra content after " + std::to_string(m) + " edges");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const ParsedLine& line = lines[i];
    if (line.tokens.size() != 3)
      fail(Errc::parse_error, "line " + std::to_string(line.number) + ": edge must be 'u v label'");
    int u = static_cast<int>(parse_int(line.tokens[0], line.number));
    int v = static_cast<int>(parse_int(line.tokens[1], line.number));
    int label = static_cast<int>(parse_int(line.tokens[2], line.number));
    edges.push_back({u - 1, v - 1, label - 1});
  }
  return LabeledGraph::build(n, k, std::move(edges));
}

void save_instance(const LabeledGraph& g, const std::filesystem::path& path) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });

  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) fail(Errc::io_error, "cannot write " + path.string());
  out << g.n() << ' ' << g.k() << ' ' << g.m() << '\n';
  for (const Edge& e : edges) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.label + 1 << '\n';
  if (!out) fail(Errc::io_error, "write failed for " + path.string());
}

void save_bundle(const InstanceBundle& bundle, const std::filesystem::path& path) {
  save_instance(bundle.graph, path);
  std::filesystem::path meta = path;
  meta += ".meta";
  std::ofstream out(meta, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + meta.string());
  out << "family = " << family_name(bundle.family) << '\n';
  out << "name = " << bundle.name << '\n';
  for (const auto& [key, value] : bundle.params) out << "param " << key << " = " << value << '\n';
  if (bundle.known_opt)
    out << "opt = " << bundle.known_opt->value << ' ' << bundle.known_opt->witness.to_string() << '\n';
  for (const KnownLocalOpt& lo : bundle.known_local_opts)
    out << "local-opt = " << lo.solution.to_string() << ' ' << lo.trapped_algorithm << '\n';
  if (!out) fail(Errc::io_error, "write failed for " + meta.string());
}

InstanceBundle load_bundle(const std::filesystem::path& path) {
  InstanceBundle bundle{load_instance(path), Family::random_b, path.stem().string(), {}, std::nullopt, {}};

  std::filesystem::path meta = path;
  meta += ".meta";
  if (!std::filesystem::exists(meta)) return bundle;

  for (const ParsedLine& line : tokenize_file(meta)) {
    const auto& t = line.tokens;
    auto expect = [&](bool ok) {
      if (!ok) fail(Errc::parse_error, "line " + std::to_string(line.number) + ": malformed metadata entry");
    };
    if (t[0] == "family") {
      expect(t.size() == 3 && t[1] == "=");
      auto f = family_from_name(t[2]);
      expect(f.has_value());
      bundle.family = *f;
    } else if (t[0] == "name") {
      expect(t.size() == 3 && t[1] == "=");
      bundle.name = t[2];
    } else if (t[0] == "param") {
      expect(t.size() == 4 && t[2] == "=");
      bundle.params[t[1]] = parse_int(t[3], line.number);
    } else if (t[0] == "opt") {
      expect(t.size() == 4 && t[1] == "=");
      bundle.known_opt = KnownOpt{static_cast<int>(parse_int(t[2], line.number)), LabelSubset::from_string(t[3])};
      check_width(bundle.known_opt->witness, bundle.graph.k());
    } else if (t[0] == "local-opt") {
      expect(t.size() == 4 && t[1] == "=");
      KnownLocalOpt lo{LabelSubset::from_string(t[2]), t[3]};
      check_width(lo.solution, bundle.graph.k());
      bundle.known_local_opts.push_back(std::move(lo));
    } else {
      fail(Errc::parse_error, "line " + std::to_string(line.number) + ": unknown metadata key '" + t[0] + "'");
    }
  }
  return bundle;
}

}  // namespace mlst
