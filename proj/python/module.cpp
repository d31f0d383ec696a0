// Python bindings for the core operations. Subsets cross the boundary as
// '0'/'1' strings (leftmost char = label 1); nodes and labels in edge lists
// are 1-based, matching the instance file format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlst/evolutionary.hpp"
#include "mlst/harness.hpp"
#include "mlst/heuristics.hpp"
#include "mlst/instances.hpp"
#include "mlst/oracle.hpp"
#include "mlst/rng.hpp"

namespace py = pybind11;
using namespace mlst;

namespace {

LabelSubset subset_arg(const LabeledGraph& g, const std::string& bits) {
  LabelSubset x = LabelSubset::from_string(bits);
  check_width(x, g.k());
  return x;
}

std::vector<Edge> edges_from_python(const std::vector<std::tuple<int, int, int>>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v, l] : edges) out.push_back({u - 1, v - 1, l - 1});
  return out;
}

py::dict record_to_dict(const RunRecord& rec) {
  py::dict d;
  d["seed"] = rec.seed;
  d["iterations"] = rec.iterations_used;
  d["solution"] = rec.best_solution.to_string();
  d["cardinality"] = rec.best_solution.count();
  d["components"] = rec.best_vector.components;
  d["fitness"] = rec.best_fitness;
  d["terminated_by"] = rec.terminated_by == Termination::target_hit ? "target-hit" : "budget";
  py::list events;
  for (const RunEvent& e : rec.events) {
    const char* kind = e.kind == EventKind::first_feasible ? "first-feasible"
                       : e.kind == EventKind::improved     ? "improved"
                       : e.kind == EventKind::ratio_reached ? "ratio-reached"
                                                             : "optimum-reached";
    events.append(py::make_tuple(e.iteration, kind, e.value));
  }
  d["events"] = events;
  return d;
}

RunTargets targets_from(std::optional<int> stop_cardinality) {
  RunTargets t;
  if (stop_cardinality) {
    t.stop_cardinality = stop_cardinality;
    t.optimum_cardinality = stop_cardinality;
  }
  return t;
}

TieBreakPolicy tie_from(const std::string& name, std::uint64_t seed) {
  if (name == "lowest") return {TieBreakKind::lowest_index, 0};
  if (name == "highest") return {TieBreakKind::highest_index, 0};
  if (name == "random") return {TieBreakKind::seeded_random, seed};
  fail(Errc::usage, "unknown tie-break '" + name + "'");
}

py::dict bundle_to_dict(const InstanceBundle& bundle) {
  py::dict d;
  d["graph"] = bundle.graph;
  d["family"] = family_name(bundle.family);
  d["name"] = bundle.name;
  py::dict params;
  for (const auto& [key, value] : bundle.params) params[py::str(key)] = value;
  d["params"] = params;
  if (bundle.known_opt)
    d["known_opt"] = py::make_tuple(bundle.known_opt->value, bundle.known_opt->witness.to_string());
  else
    d["known_opt"] = py::none();
  py::list locals_;
  for (const KnownLocalOpt& lo : bundle.known_local_opts)
    locals_.append(py::make_tuple(lo.solution.to_string(), lo.trapped_algorithm));
  d["local_opts"] = locals_;
  return d;
}

}  // namespace

PYBIND11_MODULE(mlstpy, m) {
  m.doc() = "minimum label spanning tree solvers: graph kernel, (1+1) EA, GSEMO, "
            "greedy and local-search baselines, exact oracle, instance generators";

  py::register_exception<Error>(m, "MlstError");

  py::class_<LabeledGraph>(m, "LabeledGraph")
      .def_property_readonly("n", &LabeledGraph::n)
      .def_property_readonly("k", &LabeledGraph::k)
      .def_property_readonly("m", &LabeledGraph::m)
      .def("edges",
           [](const LabeledGraph& g) {
             std::vector<std::tuple<int, int, int>> out;
             for (const Edge& e : g.edges()) out.push_back({e.u + 1, e.v + 1, e.label + 1});
             return out;
           })
      .def("__repr__", [](const LabeledGraph& g) {
        return "<LabeledGraph n=" + std::to_string(g.n()) + " k=" + std::to_string(g.k()) +
               " m=" + std::to_string(g.m()) + ">";
      });

  m.def("build_graph",
        [](int n, int k, const std::vector<std::tuple<int, int, int>>& edges) {
          return build_graph(n, k, edges_from_python(edges));
        },
        py::arg("n"), py::arg("k"), py::arg("edges"));

  m.def("component_count",
        [](const LabeledGraph& g, const std::string& bits) { return component_count(g, subset_arg(g, bits)); });
  m.def("is_feasible",
        [](const LabeledGraph& g, const std::string& bits) { return is_feasible(g, subset_arg(g, bits)); });
  m.def("max_label_frequency", &max_label_frequency);
  m.def("scalar_fitness",
        [](const LabeledGraph& g, const std::string& bits) { return scalar_fitness(g, subset_arg(g, bits)); });
  m.def("fitness_vector", [](const LabeledGraph& g, const std::string& bits) {
    FitnessVector v = fitness_vector(g, subset_arg(g, bits));
    return py::make_tuple(v.components, v.labels_used);
  });
  m.def("dominates", [](std::pair<int, int> a, std::pair<int, int> b) {
    return dominates({a.first, a.second}, {b.first, b.second});
  });

  m.def("standard_mutation", [](const std::string& bits, std::uint64_t seed) {
    Rng rng(seed);
    return standard_mutation(LabelSubset::from_string(bits), rng).to_string();
  });

  m.def("one_plus_one_ea",
        [](const LabeledGraph& g, long long budget, std::uint64_t seed, std::optional<std::string> init,
           std::optional<int> stop_cardinality) {
          std::optional<LabelSubset> start;
          if (init) start = subset_arg(g, *init);
          return record_to_dict(one_plus_one_ea(g, start, budget, targets_from(stop_cardinality), seed));
        },
        py::arg("graph"), py::arg("budget"), py::arg("seed"), py::arg("init") = py::none(),
        py::arg("stop_cardinality") = py::none());

  m.def("gsemo",
        [](const LabeledGraph& g, long long budget, std::uint64_t seed, std::optional<std::string> init,
           std::optional<int> stop_cardinality) {
          std::optional<LabelSubset> start;
          if (init) start = subset_arg(g, *init);
          GsemoResult res = gsemo(g, start, budget, targets_from(stop_cardinality), seed);
          py::list archive;
          for (const ArchiveEntry& e : res.archive.entries())
            archive.append(py::make_tuple(e.solution.to_string(), e.value.components, e.value.labels_used));
          return py::make_tuple(record_to_dict(res.record), archive);
        },
        py::arg("graph"), py::arg("budget"), py::arg("seed"), py::arg("init") = py::none(),
        py::arg("stop_cardinality") = py::none());

  m.def("modified_mvca",
        [](const LabeledGraph& g, const std::string& tie, std::uint64_t seed) {
          return modified_mvca(g, tie_from(tie, seed)).to_string();
        },
        py::arg("graph"), py::arg("tie") = "lowest", py::arg("seed") = 0);
  m.def("mvca_with_contraction",
        [](const LabeledGraph& g, const std::string& tie, std::uint64_t seed) {
          return mvca_with_contraction(g, tie_from(tie, seed)).to_string();
        },
        py::arg("graph"), py::arg("tie") = "lowest", py::arg("seed") = 0);

  m.def("in_h_switch", [](const std::string& a, const std::string& b, int h) {
    return in_h_switch(LabelSubset::from_string(a), LabelSubset::from_string(b), h);
  });
  m.def("local_search_2switch",
        [](const LabeledGraph& g, const std::string& init, const std::string& tie, std::uint64_t seed) {
          return local_search_2switch(g, subset_arg(g, init), tie_from(tie, seed)).to_string();
        },
        py::arg("graph"), py::arg("init"), py::arg("tie") = "lowest", py::arg("seed") = 0);
  m.def("is_h_switch_local_optimum", [](const LabeledGraph& g, const std::string& bits, int h) {
    return is_h_switch_local_optimum(g, subset_arg(g, bits), h);
  });
  m.def("era",
        [](const LabeledGraph& g, std::optional<std::string> tree_labels_bits, const std::string& tie,
           std::uint64_t seed) {
          SpanningTree tree = tree_from_subset(
              g, tree_labels_bits ? subset_arg(g, *tree_labels_bits) : LabelSubset::ones(g.k()));
          return era(g, tree, tie_from(tie, seed)).to_string();
        },
        py::arg("graph"), py::arg("tree_labels") = py::none(), py::arg("tie") = "lowest", py::arg("seed") = 0);

  m.def("brute_force_opt",
        [](const LabeledGraph& g, int k_limit) {
          OracleResult res = brute_force_opt(g, k_limit);
          return py::make_tuple(res.opt_value, res.witness.to_string(), res.subsets_examined);
        },
        py::arg("graph"), py::arg("k_limit") = 24);
  m.def("verify_corollary_1",
        [](const LabeledGraph& g, int k_limit) {
          CorollaryReport rep = verify_corollary_1(g, k_limit);
          return py::make_tuple(rep.holds,
                                rep.counterexample ? py::object(py::str(rep.counterexample->to_string()))
                                                   : py::object(py::none()));
        },
        py::arg("graph"), py::arg("k_limit") = 14);
  m.def("verify_component_halving",
        [](const LabeledGraph& g, const std::string& bits, int k_limit) {
          HalvingReport rep = verify_component_halving(g, subset_arg(g, bits), k_limit);
          return py::make_tuple(rep.holds,
                                rep.witness_label ? py::object(py::int_(*rep.witness_label + 1))
                                                  : py::object(py::none()),
                                rep.bound);
        },
        py::arg("graph"), py::arg("bits"), py::arg("k_limit") = 24);

  m.def("check_ratio", [](const LabeledGraph& g, const std::string& bits, int opt, double r) {
    return check_ratio(g, subset_arg(g, bits), opt, r);
  });

  m.def("gen_g_prime", [](int a, int k) { return bundle_to_dict(gen_g_prime(a, k)); });
  m.def("gen_g1", [](int k) { return bundle_to_dict(gen_g1(k)); });
  m.def("gen_g2", [](int k) { return bundle_to_dict(gen_g2(k)); });
  m.def("gen_g3", [](int b) { return bundle_to_dict(gen_g3(b)); });
  m.def("gen_random_mlst_b", [](int n, int m_, int k, int b, std::uint64_t seed) {
    return bundle_to_dict(gen_random_mlst_b(n, m_, k, b, seed));
  });

  m.def("load_instance", [](const std::string& path) { return load_instance(path); });
  m.def("save_instance", [](const LabeledGraph& g, const std::string& path) { save_instance(g, path); });
}
