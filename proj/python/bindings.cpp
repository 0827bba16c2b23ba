#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pfptopo/edge_list.hpp"
#include "pfptopo/fit.hpp"
#include "pfptopo/generate.hpp"
#include "pfptopo/graph.hpp"
#include "pfptopo/harness.hpp"
#include "pfptopo/metrics.hpp"
#include "pfptopo/model.hpp"
#include "pfptopo/preference.hpp"
#include "pfptopo/rng.hpp"

namespace py = pybind11;
using namespace pfp;

PYBIND11_MODULE(_pfptopo, m) {
  m.doc() =
      "Internet-like topology growth models (positive-feedback preference "
      "and baselines) with a full topology-metrics suite";

  py::enum_<EdgeKind>(m, "EdgeKind")
      .value("SEED", EdgeKind::Seed)
      .value("EXTERNAL", EdgeKind::External)
      .value("INTERNAL", EdgeKind::Internal);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<NodeId>(), py::arg("nodes"))
      .def("add_node", &Graph::add_node)
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"),
           py::arg("kind") = EdgeKind::Seed)
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def(
          "neighbors",
          [](const Graph& g, NodeId v) {
            const auto nb = g.neighbors(v);
            return std::vector<NodeId>(nb.begin(), nb.end());
          },
          py::arg("v"))
      .def("is_connected", &Graph::is_connected)
      .def("edges", &Graph::edges)
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("link_count", &Graph::link_count)
      .def_property_readonly("seed_links", &Graph::seed_links)
      .def_property_readonly("external_links", &Graph::external_links)
      .def_property_readonly("internal_links", &Graph::internal_links)
      .def("__repr__", [](const Graph& g) {
        return "<Graph N=" + std::to_string(g.node_count()) +
               " L=" + std::to_string(g.link_count()) + ">";
      });

  py::class_<PreferenceScheme>(m, "PreferenceScheme")
      .def_static("linear", &PreferenceScheme::linear)
      .def_static("positive_feedback", &PreferenceScheme::positive_feedback,
                  py::arg("delta"))
      .def_static("exponential", &PreferenceScheme::exponential,
                  py::arg("lam"))
      .def("__eq__",
           [](const PreferenceScheme& a, const PreferenceScheme& b) {
             return a == b;
           })
      .def("__repr__",
           [](const PreferenceScheme& s) { return to_string(s); });

  m.def("preference_weight", &preference_weight, py::arg("degree"),
        py::arg("scheme"));
  m.def("preference_ratio", &preference_ratio, py::arg("degree"),
        py::arg("mu"), py::arg("scheme"));
  m.def("expected_link_ratio", &expected_link_ratio, py::arg("p"));

  py::enum_<GrowthKind>(m, "GrowthKind")
      .value("NEW_NODE_ONLY", GrowthKind::NewNodeOnly)
      .value("INTERACTIVE", GrowthKind::Interactive);

  py::class_<ModelConfig>(m, "ModelConfig")
      .def(py::init<>())
      .def_readwrite("growth", &ModelConfig::growth)
      .def_readwrite("scheme", &ModelConfig::scheme)
      .def_readwrite("new_node_links", &ModelConfig::new_node_links)
      .def_readwrite("one_host_probability",
                     &ModelConfig::one_host_probability)
      .def_readwrite("target_nodes", &ModelConfig::target_nodes)
      .def_readwrite("seed_nodes", &ModelConfig::seed_nodes)
      .def_readwrite("seed_links", &ModelConfig::seed_links)
      .def_readwrite("rng_seed", &ModelConfig::rng_seed)
      .def("validate", &ModelConfig::validate)
      .def_static("ba", &ModelConfig::ba, py::arg("nodes"),
                  py::arg("seed") = 1)
      .def_static("ig", &ModelConfig::ig, py::arg("nodes"),
                  py::arg("seed") = 1)
      .def_static("ba_pfp", &ModelConfig::ba_pfp, py::arg("nodes"),
                  py::arg("seed") = 1)
      .def_static("pfp", &ModelConfig::pfp, py::arg("nodes"),
                  py::arg("seed") = 1)
      .def("__repr__",
           [](const ModelConfig& cfg) { return describe(cfg); });

  m.def(
      "seed_graph",
      [](NodeId n0, int m0, std::uint64_t seed) {
        Rng rng(seed);
        return seed_graph(n0, m0, rng);
      },
      py::arg("nodes"), py::arg("links"), py::arg("seed") = 1);
  m.def("generate", py::overload_cast<const ModelConfig&>(&generate),
        py::arg("config"), py::call_guard<py::gil_scoped_release>());

  py::class_<DegreeDistribution>(m, "DegreeDistribution")
      .def_readonly("pk", &DegreeDistribution::pk)
      .def_readonly("max_degree", &DegreeDistribution::max_degree)
      .def_readonly("gamma", &DegreeDistribution::gamma)
      .def("probability", &DegreeDistribution::probability, py::arg("k"));

  py::class_<RichClubCurve>(m, "RichClubCurve")
      .def_readonly("ranked_nodes", &RichClubCurve::ranked_nodes)
      .def_readonly("phi", &RichClubCurve::phi)
      .def_readonly("theta", &RichClubCurve::theta)
      .def_readonly("top_clique", &RichClubCurve::top_clique)
      .def("phi_at_rank", &RichClubCurve::phi_at_rank, py::arg("rank"))
      .def("phi_at_fraction", &RichClubCurve::phi_at_fraction,
           py::arg("fraction"));

  py::class_<MixingStats>(m, "MixingStats")
      .def_readonly("alpha", &MixingStats::alpha)
      .def_readonly("knn", &MixingStats::knn);

  py::class_<PathStats>(m, "PathStats")
      .def_readonly("ccd", &PathStats::ccd)
      .def_readonly("ell_star", &PathStats::ell_star);

  py::class_<TriangleStats>(m, "TriangleStats")
      .def_readonly("kt", &TriangleStats::kt)
      .def_readonly("ccd", &TriangleStats::ccd)
      .def_readonly("kt_by_degree", &TriangleStats::kt_by_degree)
      .def_readonly("clustering", &TriangleStats::clustering);

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("nodes", &MetricsReport::nodes)
      .def_readonly("links", &MetricsReport::links)
      .def_readonly("seed_links", &MetricsReport::seed_links)
      .def_readonly("external_links", &MetricsReport::external_links)
      .def_readonly("internal_links", &MetricsReport::internal_links)
      .def_readonly("degrees", &MetricsReport::degrees)
      .def_readonly("rich", &MetricsReport::rich)
      .def_readonly("mixing", &MetricsReport::mixing)
      .def_readonly("paths", &MetricsReport::paths)
      .def_readonly("triangles", &MetricsReport::triangles)
      .def_readonly("phi_001", &MetricsReport::phi_001);

  m.def("degree_distribution", &degree_distribution, py::arg("g"));
  m.def("rich_club", &rich_club, py::arg("g"));
  m.def("assortativity", &assortativity, py::arg("g"));
  m.def("knn_by_degree", &knn_by_degree, py::arg("g"));
  m.def("path_stats", &path_stats, py::arg("g"),
        py::call_guard<py::gil_scoped_release>());
  m.def("triangle_stats", &triangle_stats, py::arg("g"));
  m.def("report", &report, py::arg("g"),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "fit_power_law",
      [](const std::vector<std::pair<double, double>>& points, double x_lo,
         double x_hi) { return fit_power_law(points, x_lo, x_hi); },
      py::arg("points"), py::arg("x_lo"), py::arg("x_hi"));

  m.def("read_edge_list",
        py::overload_cast<const std::filesystem::path&>(&read_edge_list),
        py::arg("path"));
  m.def("write_edge_list",
        py::overload_cast<const Graph&, const std::filesystem::path&>(
            &write_edge_list),
        py::arg("g"), py::arg("path"));
  m.def("edge_list_string", &edge_list_string, py::arg("g"));

  m.def(
      "track_trajectory",
      [](const ModelConfig& cfg, int sample_every) {
        return track_trajectory(cfg, sample_every).samples;
      },
      py::arg("config"), py::arg("sample_every"),
      py::call_guard<py::gil_scoped_release>());
}
