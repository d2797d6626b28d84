#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metricdim/ball.hpp"
#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"
#include "metricdim/io.hpp"
#include "metricdim/oracle.hpp"
#include "metricdim/orient.hpp"
#include "metricdim/presentation.hpp"
#include "metricdim/resolve.hpp"
#include "metricdim/witness.hpp"

namespace py = pybind11;
using namespace metricdim;

namespace {

std::vector<VertexId> to_ids(const std::vector<std::string>& labels) {
  std::vector<VertexId> out;
  out.reserve(labels.size());
  for (const auto& s : labels) out.emplace_back(s);
  return out;
}

std::vector<std::string> to_strings(const std::vector<VertexId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (const auto& v : ids) out.push_back(v.str());
  return out;
}

py::dict dimension_dict(const DimensionResult& r) {
  py::dict d;
  d["method"] = to_string(r.method);
  if (r.value) {
    d["value"] = *r.value;
  } else {
    d["value"] = py::str("INFINITE");
  }
  if (r.witness) {
    d["witness"] = to_strings(r.witness->vertices);
    d["witness_verified"] = r.witness->verified;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

py::dict check_dict(const BallResolutionCheck& c) {
  py::dict d;
  d["ok"] = c.ok();
  d["resolved"] = c.resolved;
  d["unresolved"] = c.unresolved;
  d["undetermined"] = c.undetermined;
  if (c.counterexample) {
    d["counterexample"] =
        py::make_tuple(c.counterexample->first.str(), c.counterexample->second.str());
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

py::dict witness_dict(const WitnessCertificate& cert) {
  py::dict d;
  d["mode"] = to_string(cert.mode);
  d["u"] = cert.u.str();
  d["v"] = cert.v.str();
  d["distance_uv"] = cert.distance_uv;
  d["radius"] = cert.radius;
  py::list entries;
  for (const auto& e : cert.entries) {
    py::dict entry;
    entry["w"] = e.w.str();
    entry["distance_to_u"] = e.distance_to_u;
    entry["distance_to_v"] = e.distance_to_v;
    entries.append(entry);
  }
  d["witnesses"] = entries;
  return d;
}

Graph make_graph(const std::vector<std::string>& vertices,
                 const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::pair<VertexId, VertexId>> e;
  e.reserve(edges.size());
  for (const auto& [a, b] : edges) e.emplace_back(VertexId(a), VertexId(b));
  return Graph(to_ids(vertices), e);
}

}  // namespace

PYBIND11_MODULE(metricdim, m) {
  m.doc() = "weak and strong metric dimension of finite graphs and finitely "
            "presented infinite graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("vertices", [](const Graph& g) { return to_strings(g.vertices()); })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [a, b] : g.edge_list()) out.emplace_back(a.str(), b.str());
             return out;
           })
      .def("neighbors",
           [](const Graph& g, const std::string& v) {
             return to_strings(g.neighbors(VertexId(v)));
           })
      .def("degree",
           [](const Graph& g, const std::string& v) {
             return g.degree(g.index_of(VertexId(v)));
           })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " edges=" +
               std::to_string(g.edge_count()) + ">";
      });

  m.def("bfs_distances", [](const Graph& g, const std::string& source) {
    std::map<std::string, int> out;
    for (const auto& [v, d] : bfs_distances(g, VertexId(source))) out[v.str()] = d;
    return out;
  });
  m.def("distance_to_set",
        [](const Graph& g, const std::string& v, const std::vector<std::string>& w) {
          const auto r = distance_to_set(g, VertexId(v), to_ids(w));
          return py::make_tuple(r.distance, to_strings(r.minimizers));
        });
  m.def("branch_vertices",
        [](const Graph& g) { return to_strings(branch_vertices(g)); });
  m.def("enumerate_paths",
        [](const Graph& g, const std::string& a, const std::string& b,
           std::size_t limit) {
          const auto r = enumerate_paths(g, VertexId(a), VertexId(b), limit);
          std::vector<std::vector<std::string>> paths;
          for (const auto& p : r.paths) paths.push_back(to_strings(p.vertices));
          return py::make_tuple(paths, r.truncated);
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("limit") = SIZE_MAX);
  m.def("forest_making_set",
        [](const Graph& g) { return to_strings(forest_making_set(g)); });
  m.def("is_connected", &is_connected);
  m.def("is_tree", &is_tree);
  m.def("connected_components", &connected_components);

  m.def("weakly_resolves",
        [](const Graph& g, const std::string& w, const std::string& u,
           const std::string& v) {
          return weakly_resolves(g, VertexId(w), VertexId(u), VertexId(v));
        });
  m.def("strongly_resolves",
        [](const Graph& g, const std::string& w, const std::string& u,
           const std::string& v) {
          return strongly_resolves(g, VertexId(w), VertexId(u), VertexId(v));
        });
  m.def("is_resolving_set",
        [](const Graph& g, const std::vector<std::string>& w, const std::string& mode) {
          const auto r = is_resolving_set(g, to_ids(w), resolve_mode_from_string(mode));
          py::object cx = py::none();
          if (r.counterexample) {
            cx = py::make_tuple(r.counterexample->first.str(),
                                r.counterexample->second.str());
          }
          return py::make_tuple(r.resolving, cx);
        },
        py::arg("g"), py::arg("w_set"), py::arg("mode") = "weak");
  m.def("metric_dimension",
        [](const Graph& g, int limit) {
          return dimension_dict(metric_dimension_exact(g, limit));
        },
        py::arg("g"), py::arg("limit") = kDefaultSubsetSearchLimit);
  m.def("strong_metric_dimension",
        [](const Graph& g, int limit) {
          return dimension_dict(strong_metric_dimension_exact(g, limit));
        },
        py::arg("g"), py::arg("limit") = kDefaultSubsetSearchLimit);
  m.def("tree_weak_dimension",
        [](const Graph& g) { return dimension_dict(tree_weak_dimension(g)); });
  m.def("tree_strong_dimension",
        [](const Graph& g) { return dimension_dict(tree_strong_dimension(g)); });
  m.def("satisfies_degree_bound", &satisfies_degree_bound);

  py::class_<InfiniteGraphOracle>(m, "Oracle")
      .def("neighbors",
           [](const InfiniteGraphOracle& o, const std::string& v) {
             return to_strings(o.neighbors(VertexId(v)));
           })
      .def_property_readonly("basepoint",
                             [](const InfiniteGraphOracle& o) {
                               return o.basepoint().str();
                             })
      .def_property_readonly("name", [](const InfiniteGraphOracle& o) {
        return o.metadata().name;
      });

  m.def("generator", &make_generator, py::arg("name"), py::arg("param") = 0);

  py::class_<CertifiedBall>(m, "Ball")
      .def_readonly("graph", &CertifiedBall::graph)
      .def_readonly("radius", &CertifiedBall::radius)
      .def("depth",
           [](const CertifiedBall& b) {
             std::map<std::string, int> out;
             for (int i = 0; i < b.graph.order(); ++i) {
               out[b.graph.label(i).str()] = b.depth[i];
             }
             return out;
           })
      .def("boundary",
           [](const CertifiedBall& b) { return to_strings(b.boundary); });

  m.def("ball", &build_ball, py::arg("oracle"), py::arg("radius"));
  m.def("certified_distance",
        [](const InfiniteGraphOracle& o, const std::string& u, const std::string& v,
           int radius) -> py::object {
          const auto d = certified_distance(o, VertexId(u), VertexId(v), radius);
          if (!d) return py::none();
          return py::int_(*d);
        });
  m.def("verify_resolving_on_ball",
        [](const CertifiedBall& ball, const std::vector<std::string>& w,
           const std::string& mode) {
          return check_dict(
              verify_resolving_on_ball(ball, to_ids(w), resolve_mode_from_string(mode)));
        });
  m.def("end_count_estimate", &end_count_estimate);

  py::class_<FinicyclicPresentation>(m, "Presentation")
      .def(py::init([](const Graph& core, const std::vector<std::string>& rays) {
             FinicyclicPresentation p{core, to_ids(rays)};
             validate(p);
             return p;
           }),
           py::arg("core"), py::arg("rays"))
      .def_readonly("core", &FinicyclicPresentation::core)
      .def("rays", [](const FinicyclicPresentation& p) {
        return to_strings(p.ray_attachments);
      });

  m.def("realize", &realize);
  m.def("classify", [](const FinicyclicPresentation& p) {
    return py::module_::import("json").attr("loads")(
        classification_to_json(classify(p)).dump());
  });
  m.def("classify_oracle", [](const InfiniteGraphOracle& o) {
    return py::module_::import("json").attr("loads")(
        classification_to_json(classify(o)).dump());
  });
  m.def("construct_weak_resolving_set", [](const FinicyclicPresentation& p) {
    return to_strings(construct_weak_resolving_set(p));
  });
  m.def("construct_strong_resolving_set", [](const FinicyclicPresentation& p) {
    return to_strings(construct_strong_resolving_set(p));
  });
  m.def("partition_components", [](const FinicyclicPresentation& p) {
    return py::module_::import("json").attr("loads")(
        partition_to_json(partition_components(p)).dump());
  });
  m.def("strong_unresolved_witness",
        [](const FinicyclicPresentation& p, const std::vector<std::string>& w) {
          return witness_dict(strong_unresolved_witness(p, to_ids(w)));
        });
  m.def("weak_unresolved_witness",
        [](const InfiniteGraphOracle& o, const std::vector<std::string>& w) {
          return witness_dict(weak_unresolved_witness(o, to_ids(w)));
        });

  m.def("geodesic_prefixes",
        [](const InfiniteGraphOracle& o, const std::string& w, int horizon,
           int radius) {
          std::vector<std::pair<std::vector<std::string>, bool>> out;
          for (const auto& p : geodesic_prefixes(o, VertexId(w), horizon, radius)) {
            out.emplace_back(to_strings(p.vertices), p.certified);
          }
          return out;
        });
  m.def("geodesic_orientation",
        [](const InfiniteGraphOracle& o, const std::vector<std::string>& w,
           int horizon, int radius) {
          const auto og = geodesic_orientation(o, to_ids(w), horizon, radius);
          py::dict d;
          std::vector<std::pair<std::string, std::string>> directed, undirected;
          for (const auto& [a, b] : og.directed) directed.emplace_back(a.str(), b.str());
          for (const auto& [a, b] : og.undirected) {
            undirected.emplace_back(a.str(), b.str());
          }
          d["directed"] = directed;
          d["undirected"] = undirected;
          return d;
        });
  m.def("find_bad_pairs",
        [](const InfiniteGraphOracle& o, const std::vector<std::string>& w,
           int horizon, int radius) {
          const auto og = geodesic_orientation(o, to_ids(w), horizon, radius);
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& [a, b] : find_bad_pairs(og)) out.emplace_back(a.str(), b.str());
          return out;
        });

  m.def("graph_to_json", [](const Graph& g) { return graph_to_json(g).dump(); });
  m.def("graph_from_json", [](const std::string& text) {
    return graph_from_json(nlohmann::json::parse(text));
  });
}
