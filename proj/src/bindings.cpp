// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tripods/bounds.hpp"
#include "tripods/errors.hpp"
#include "tripods/io.hpp"
#include "tripods/oracle.hpp"
#include "tripods/pipeline.hpp"
#include "tripods/tripod.hpp"

namespace py = pybind11;

namespace tripods {
namespace {

using NamedEdge = std::pair<std::string, std::string>;

InstanceDocument from_edges(const std::vector<std::string>& names,
                            const std::vector<NamedEdge>& edges,
                            const std::vector<std::string>& sources,
                            const std::vector<std::string>& sinks) {
  MigrationDigraph d{Digraph::with_vertices(static_cast<Vertex>(names.size())), {}, {}};
  InstanceDocument doc = make_instance(d, names);
  for (const auto& [u, v] : edges) {
    if (!doc.graph.graph.add_edge(doc.id(u), doc.id(v))) {
      throw PreconditionError("duplicate edge " + u + " -> " + v);
    }
  }
  for (const std::string& s : sources) doc.graph.sources.insert(doc.id(s));
  for (const std::string& t : sinks) doc.graph.sinks.insert(doc.id(t));
  return doc;
}

std::vector<std::string> named(const InstanceDocument& doc, const VertexSet& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(doc.names[static_cast<std::size_t>(v)]);
  return out;
}

py::dict tripod_dict(const InstanceDocument& doc, const Tripod& r) {
  auto name = [&](Vertex v) { return doc.names[static_cast<std::size_t>(v)]; };
  auto path = [&](const Path& p) {
    std::vector<std::string> out;
    for (Vertex v : p.vertices()) out.push_back(name(v));
    return out;
  };
  py::dict d;
  d["s1"] = name(r.s1);
  d["s2"] = name(r.s2);
  d["t"] = name(r.t);
  d["c"] = name(r.c);
  d["branch1"] = path(r.branch1);
  d["branch2"] = path(r.branch2);
  d["tail"] = path(r.tail);
  return d;
}

EngineConfig engine(const std::string& g5, const std::string& route, std::size_t cap) {
  EngineConfig cfg;
  cfg.bounds = BoundTable(G5::parse(g5), parse_route(route));
  cfg.max_sources = cap;
  return cfg;
}

}  // namespace
}  // namespace tripods

PYBIND11_MODULE(_tripods, m) {
  using namespace tripods;
  m.doc() = "Certified tripod packings and hitting sets";

  auto precondition =
      py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", precondition.ptr());
  py::register_exception<SoundnessError>(m, "SoundnessError", PyExc_RuntimeError);
  py::register_exception<BoundShortfallError>(m, "BoundShortfallError", PyExc_RuntimeError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<InstanceDocument>(m, "Instance")
      .def_static("parse", &parse_instance, py::arg("text"))
      .def_static(
          "generate",
          [](const std::string& spec) {
            GeneratedInstance g = generate(InstanceSpec::parse(spec));
            return make_instance(g.graph, g.names);
          },
          py::arg("spec"))
      .def_static("from_edges", &from_edges, py::arg("names"), py::arg("edges"),
                  py::arg("sources"), py::arg("sinks"))
      .def("to_text", &print_instance)
      .def_property_readonly("names", [](const InstanceDocument& d) { return d.names; })
      .def_property_readonly("sources",
                             [](const InstanceDocument& d) { return named(d, d.graph.sources); })
      .def_property_readonly("sinks",
                             [](const InstanceDocument& d) { return named(d, d.graph.sinks); })
      .def_property_readonly("edges",
                             [](const InstanceDocument& d) {
                               std::vector<NamedEdge> out;
                               for (const Edge& e : d.graph.graph.edges()) {
                                 out.emplace_back(d.names[static_cast<std::size_t>(e.tail)],
                                                  d.names[static_cast<std::size_t>(e.head)]);
                               }
                               return out;
                             })
      .def("__eq__", [](const InstanceDocument& a, const InstanceDocument& b) { return a == b; })
      .def("__len__", [](const InstanceDocument& d) { return d.names.size(); });

  m.def("tripod_exists", [](const InstanceDocument& d) { return tripod_exists(d.graph); },
        py::arg("instance"));
  m.def(
      "find_tripod",
      [](const InstanceDocument& d) -> py::object {
        if (auto r = find_tripod(d.graph)) return tripod_dict(d, *r);
        return py::none();
      },
      py::arg("instance"));
  m.def(
      "certify",
      [](const InstanceDocument& d, std::size_t k, const std::string& route,
         const std::string& g5, bool edges, std::size_t cap) {
        EngineConfig cfg = engine(g5, route, cap);
        CertificateDocument doc =
            edges ? make_document(corollary2_certify(d.graph, k, cfg), k, cfg.bounds, true)
                  : make_document(theorem1_certify(d.graph, k, cfg), k, cfg.bounds, true);
        return print_certificate(doc, d);
      },
      py::arg("instance"), py::arg("k"), py::arg("route") = "ramsey", py::arg("g5") = "t",
      py::arg("edges") = false, py::arg("cap") = 12,
      "Certificate JSON: a packing of k tripods or a small hitting set.");
  m.def(
      "verify",
      [](const InstanceDocument& d, const std::string& certificate) {
        Verdict v = verify_document(d, parse_certificate(certificate, d));
        return std::make_pair(v.ok(), v.reason());
      },
      py::arg("instance"), py::arg("certificate"));
  m.def(
      "bounds",
      [](long k, const std::string& g5, const std::string& route) {
        BoundTable b(G5::parse(g5), parse_route(route));
        py::dict out;
        out["g5"] = b.g5(k).str();
        out["g9"] = b.g9(k).str();
        out["g4_ramsey"] = b.g4_ramsey(k).str();
        out["g4_iter"] = b.g4_iter(k).str();
        out["f1"] = b.f1(k).str();
        return out;
      },
      py::arg("k"), py::arg("g5") = "t", py::arg("route") = "ramsey");
  m.def(
      "brute_packing_number",
      [](const InstanceDocument& d) { return brute_packing_number(d.graph); },
      py::arg("instance"));
  m.def(
      "to_dot", [](const InstanceDocument& d) { return to_dot(d); }, py::arg("instance"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        CliResult r = run_cli(args);
        return py::make_tuple(r.status, r.out, r.err);
      },
      py::arg("args"));
}
