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

#include "tripods/io.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tripods/errors.hpp"
#include "tripods/oracle.hpp"
#include "tripods/pipeline.hpp"

namespace tripods {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kInstanceFormat = "tripod-instance";
constexpr const char* kCertificateFormat = "tripod-certificate";
constexpr int kVersion = 1;

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size() && line[i] != '#') {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '#' || std::isspace(static_cast<unsigned char>(c));
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Vertex InstanceDocument::id(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw PreconditionError("unknown vertex '" + name + "'");
  return static_cast<Vertex>(it - names.begin());
}

InstanceDocument parse_instance(const std::string& text) {
  InstanceDocument doc;
  std::map<std::string, Vertex> ids;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool header = false;
  auto lookup = [&](const Token& t, int line_no) {
    auto it = ids.find(t.text);
    if (it == ids.end()) {
      throw ParseError("undeclared vertex '" + t.text + "'", line_no, t.column);
    }
    return it->second;
  };
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0].text;
    if (!header) {
      if (directive != "format") {
        throw ParseError("expected 'format tripod-instance 1'", number, tokens[0].column);
      }
      if (tokens.size() != 3 || tokens[1].text != kInstanceFormat) {
        throw ParseError("expected 'format tripod-instance 1'", number,
                         tokens.size() > 1 ? tokens[1].column : tokens[0].column);
      }
      if (tokens[2].text != std::to_string(kVersion)) {
        throw ParseError("unsupported format version '" + tokens[2].text + "'",
                         number, tokens[2].column);
      }
      header = true;
      continue;
    }
    if (tokens.size() < 2) {
      throw ParseError("'" + directive + "' needs arguments", number, tokens[0].column);
    }
    if (directive == "vertex") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (ids.contains(t.text)) {
          throw ParseError("duplicate vertex '" + t.text + "'", number, t.column);
        }
        const auto v = static_cast<Vertex>(doc.names.size());
        ids[t.text] = v;
        doc.names.push_back(t.text);
        doc.graph.graph.add_vertex(v);
      }
    } else if (directive == "source" || directive == "sink") {
      VertexSet& target = directive == "source" ? doc.graph.sources : doc.graph.sinks;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!target.insert(lookup(tokens[i], number)).second) {
          throw ParseError("duplicate " + directive + " '" + tokens[i].text + "'",
                           number, tokens[i].column);
        }
      }
    } else if (directive == "edge") {
      if (tokens.size() != 3) {
        throw ParseError("'edge' takes exactly two vertices", number, tokens[0].column);
      }
      Vertex u = lookup(tokens[1], number);
      Vertex v = lookup(tokens[2], number);
      if (u == v) throw ParseError("loop at '" + tokens[1].text + "'", number, tokens[1].column);
      if (!doc.graph.graph.add_edge(u, v)) {
        throw ParseError("duplicate edge", number, tokens[1].column);
      }
    } else {
      throw ParseError("unknown directive '" + directive + "'", number, tokens[0].column);
    }
  }
  if (!header) throw ParseError("missing 'format tripod-instance 1' header", number + 1, 1);
  return doc;
}

std::string print_instance(const InstanceDocument& doc) {
  std::ostringstream out;
  out << "format " << kInstanceFormat << ' ' << kVersion << '\n';
  for (const std::string& name : doc.names) out << "vertex " << name << '\n';
  for (Vertex s : doc.graph.sources) out << "source " << doc.names[static_cast<std::size_t>(s)] << '\n';
  for (Vertex t : doc.graph.sinks) out << "sink " << doc.names[static_cast<std::size_t>(t)] << '\n';
  for (const Edge& e : doc.graph.graph.edges()) {
    out << "edge " << doc.names[static_cast<std::size_t>(e.tail)] << ' '
        << doc.names[static_cast<std::size_t>(e.head)] << '\n';
  }
  return out.str();
}

InstanceDocument make_instance(const MigrationDigraph& d,
                               std::vector<std::string> names) {
  d.validate();
  const auto n = static_cast<std::size_t>(d.graph.id_bound());
  if (d.graph.num_vertices() != n) {
    throw PreconditionError("instance vertices must be 0..n-1");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  }
  if (names.size() != n) throw PreconditionError("one name per vertex required");
  std::set<std::string> seen;
  for (const std::string& name : names) {
    if (!valid_name(name)) throw PreconditionError("invalid vertex name '" + name + "'");
    if (!seen.insert(name).second) throw PreconditionError("duplicate vertex name '" + name + "'");
  }
  return {d, std::move(names)};
}

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kPacking:
      return "packing";
    case DocumentKind::kHittingSet:
      return "hitting-set";
    case DocumentKind::kEdgePacking:
      return "edge-packing";
    case DocumentKind::kEdgeHittingSet:
      return "edge-hitting-set";
  }
  return "";
}

namespace {

DocumentKind parse_kind(const std::string& text) {
  for (DocumentKind k : {DocumentKind::kPacking, DocumentKind::kHittingSet,
                         DocumentKind::kEdgePacking, DocumentKind::kEdgeHittingSet}) {
    if (to_string(k) == text) return k;
  }
  throw PreconditionError("unknown certificate kind '" + text + "'");
}

bool is_edge_kind(DocumentKind k) {
  return k == DocumentKind::kEdgePacking || k == DocumentKind::kEdgeHittingSet;
}

bool is_packing_kind(DocumentKind k) {
  return k == DocumentKind::kPacking || k == DocumentKind::kEdgePacking;
}

void fill_bounds(CertificateDocument& doc, std::size_t k, const BoundTable& bounds) {
  doc.k = k;
  doc.g5 = bounds.g5_config().text();
  doc.route = bounds.route();
  doc.f1 = bounds.f1(static_cast<long>(k));
}

Json path_json(const Path& p, const InstanceDocument& inst) {
  Json out = Json::array();
  for (Vertex v : p.vertices()) out.push_back(inst.names.at(static_cast<std::size_t>(v)));
  return out;
}

Path path_from(const Json& j, const InstanceDocument& inst) {
  std::vector<Vertex> vs;
  for (const Json& name : j) vs.push_back(inst.id(name.get<std::string>()));
  return Path(std::move(vs));
}

std::pair<int, int> position_of(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

CertificateDocument make_document(const Certificate& cert, std::size_t k,
                                  const BoundTable& bounds, bool verified) {
  CertificateDocument doc;
  doc.kind = cert.kind == CertificateKind::kPacking ? DocumentKind::kPacking
                                                    : DocumentKind::kHittingSet;
  doc.tripods = cert.packing;
  doc.hitting_set = cert.hitting_set;
  doc.provenance = cert.provenance;
  doc.verified = verified;
  fill_bounds(doc, k, bounds);
  return doc;
}

CertificateDocument make_document(const EdgeCertificate& cert, std::size_t k,
                                  const BoundTable& bounds, bool verified) {
  CertificateDocument doc;
  doc.kind = cert.kind == CertificateKind::kPacking ? DocumentKind::kEdgePacking
                                                    : DocumentKind::kEdgeHittingSet;
  doc.tripods = cert.packing;
  doc.edges = cert.hitting_set;
  doc.provenance = cert.provenance;
  doc.verified = verified;
  fill_bounds(doc, k, bounds);
  return doc;
}

std::string print_certificate(const CertificateDocument& doc,
                              const InstanceDocument& instance) {
  auto name = [&](Vertex v) { return instance.names.at(static_cast<std::size_t>(v)); };
  Json j;
  j["format"] = kCertificateFormat;
  j["version"] = kVersion;
  j["kind"] = to_string(doc.kind);
  j["k"] = doc.k;
  Json tripods = Json::array();
  for (const Tripod& r : doc.tripods) {
    Json t;
    t["s1"] = name(r.s1);
    t["s2"] = name(r.s2);
    t["t"] = name(r.t);
    t["c"] = name(r.c);
    t["branch1"] = path_json(r.branch1, instance);
    t["branch2"] = path_json(r.branch2, instance);
    t["tail"] = path_json(r.tail, instance);
    tripods.push_back(std::move(t));
  }
  j["tripods"] = std::move(tripods);
  Json hitting = Json::array();
  for (Vertex v : doc.hitting_set) hitting.push_back(name(v));
  j["hitting_set"] = std::move(hitting);
  Json edges = Json::array();
  for (const Edge& e : doc.edges) edges.push_back(Json::array({name(e.tail), name(e.head)}));
  j["edges"] = std::move(edges);
  j["provenance"] = doc.provenance;
  j["bounds"] = {{"k", doc.k},
                 {"g5", doc.g5},
                 {"route", to_string(doc.route)},
                 {"f1", doc.f1.str()}};
  j["verified"] = doc.verified;
  return j.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text,
                                      const InstanceDocument& instance) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, column] = position_of(text, e.byte);
    throw ParseError(std::string("malformed certificate JSON: ") + e.what(), line, column);
  }
  CertificateDocument doc;
  try {
    if (j.at("format").get<std::string>() != kCertificateFormat) {
      throw PreconditionError("not a tripod certificate");
    }
    if (j.at("version").get<int>() != kVersion) {
      throw PreconditionError("unsupported certificate version");
    }
    doc.kind = parse_kind(j.at("kind").get<std::string>());
    doc.k = j.at("k").get<std::size_t>();
    for (const Json& t : j.at("tripods")) {
      Tripod r;
      r.s1 = instance.id(t.at("s1").get<std::string>());
      r.s2 = instance.id(t.at("s2").get<std::string>());
      r.t = instance.id(t.at("t").get<std::string>());
      r.c = instance.id(t.at("c").get<std::string>());
      r.branch1 = path_from(t.at("branch1"), instance);
      r.branch2 = path_from(t.at("branch2"), instance);
      r.tail = path_from(t.at("tail"), instance);
      doc.tripods.push_back(std::move(r));
    }
    for (const Json& v : j.at("hitting_set")) {
      if (!doc.hitting_set.insert(instance.id(v.get<std::string>())).second) {
        throw PreconditionError("hitting set repeats a vertex");
      }
    }
    for (const Json& e : j.at("edges")) {
      if (e.size() != 2) throw PreconditionError("an edge needs two endpoints");
      doc.edges.push_back({instance.id(e.at(0).get<std::string>()),
                           instance.id(e.at(1).get<std::string>())});
    }
    doc.provenance = j.at("provenance").get<std::vector<std::string>>();
    const Json& b = j.at("bounds");
    if (b.at("k").get<std::size_t>() != doc.k) {
      throw PreconditionError("bound snapshot k differs from k");
    }
    doc.g5 = b.at("g5").get<std::string>();
    doc.route = parse_route(b.at("route").get<std::string>());
    const std::string f1 = b.at("f1").get<std::string>();
    if (f1.empty() || !std::all_of(f1.begin(), f1.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw PreconditionError("bound snapshot f1 must be a decimal integer");
    }
    doc.f1 = BigInt(f1);
    doc.verified = j.at("verified").get<bool>();
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("certificate: ") + e.what());
  }
  return doc;
}

Verdict verify_document(const InstanceDocument& instance,
                        const CertificateDocument& doc) {
  if (doc.k < 1) return Verdict::fail("k must be >= 1");
  BigInt expected;
  try {
    expected = BoundTable(G5::parse(doc.g5), doc.route).f1(static_cast<long>(doc.k));
  } catch (const PreconditionError& e) {
    return Verdict::fail(std::string("bound snapshot: ") + e.what());
  }
  if (expected != doc.f1) {
    return Verdict::fail("bound snapshot: f1(" + std::to_string(doc.k) + ") is " +
                         expected.str() + ", document says " + doc.f1.str());
  }
  const bool packing = is_packing_kind(doc.kind);
  if (packing && (!doc.hitting_set.empty() || !doc.edges.empty())) {
    return Verdict::fail("packing document carries a hitting set");
  }
  if (!packing && !doc.tripods.empty()) {
    return Verdict::fail("hitting-set document carries tripods");
  }
  if (!is_edge_kind(doc.kind) && !doc.edges.empty()) {
    return Verdict::fail("vertex document carries edges");
  }
  if (is_edge_kind(doc.kind) && !doc.hitting_set.empty()) {
    return Verdict::fail("edge document carries vertices");
  }
  const CertificateKind kind =
      packing ? CertificateKind::kPacking : CertificateKind::kHittingSet;
  if (is_edge_kind(doc.kind)) {
    EdgeCertificate c{kind, doc.tripods, doc.edges, doc.provenance, doc.f1};
    return verify_edge_certificate(instance.graph, doc.k, c);
  }
  Certificate c{kind, doc.tripods, doc.hitting_set, doc.provenance, doc.f1};
  return verify_certificate(instance.graph, doc.k, c);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const InstanceDocument& instance,
                   const CertificateDocument* certificate) {
  static const char* kPalette[] = {"red", "blue", "darkgreen", "orange",
                                   "purple", "brown", "magenta", "teal"};
  const MigrationDigraph& d = instance.graph;
  std::map<Edge, std::string> edge_colour;
  VertexSet centres, hit;
  std::set<Edge> cut;
  if (certificate) {
    for (std::size_t i = 0; i < certificate->tripods.size(); ++i) {
      const Tripod& r = certificate->tripods[i];
      centres.insert(r.c);
      for (const Edge& e : r.edges()) edge_colour[e] = kPalette[i % 8];
    }
    hit = certificate->hitting_set;
    cut.insert(certificate->edges.begin(), certificate->edges.end());
  }
  std::ostringstream out;
  out << "digraph tripods {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (Vertex v : d.graph.vertices()) {
    std::vector<std::string> attrs;
    const bool s = d.is_source(v), t = d.is_sink(v);
    if (s && t) {
      attrs.push_back("shape=doubleoctagon");
    } else if (s) {
      attrs.push_back("shape=invtriangle");
    } else if (t) {
      attrs.push_back("shape=doublecircle");
    }
    if (centres.contains(v)) attrs.push_back("style=filled, fillcolor=gold");
    if (hit.contains(v)) attrs.push_back("style=filled, fillcolor=gray, color=red");
    out << "  " << quote(instance.names[static_cast<std::size_t>(v)]);
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : d.graph.edges()) {
    out << "  " << quote(instance.names[static_cast<std::size_t>(e.tail)]) << " -> "
        << quote(instance.names[static_cast<std::size_t>(e.head)]);
    if (auto it = edge_colour.find(e); it != edge_colour.end()) {
      out << " [color=" << it->second << ", penwidth=2]";
    } else if (cut.contains(e)) {
      out << " [color=red, style=dashed]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string describe(const Tripod& r, const InstanceDocument& inst) {
  auto name = [&](Vertex v) { return inst.names[static_cast<std::size_t>(v)]; };
  auto path = [&](const Path& p) {
    std::string s;
    for (Vertex v : p.vertices()) s += (s.empty() ? "" : " ") + name(v);
    return s;
  };
  return "tripod s1=" + name(r.s1) + " s2=" + name(r.s2) + " c=" + name(r.c) +
         " t=" + name(r.t) + "\n  branch1: " + path(r.branch1) +
         "\n  branch2: " + path(r.branch2) + "\n  tail: " + path(r.tail) + "\n";
}

struct EngineFlags {
  std::size_t k = 1;
  std::string route = "ramsey";
  std::string g5 = "t";
  std::size_t cap = 12;

  EngineConfig config() const {
    EngineConfig cfg;
    cfg.bounds = BoundTable(G5::parse(g5), parse_route(route));
    cfg.max_sources = cap;
    return cfg;
  }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& f) {
  cmd->add_option("--k", f.k, "Number of tripods to pack")->check(CLI::PositiveNumber);
  cmd->add_option("--route", f.route, "Bound route: ramsey or iterative")
      ->check(CLI::IsMember({"ramsey", "iterative"}));
  cmd->add_option("--g5", f.g5, "g5 as an expression in t or a table '1,3,6'");
  cmd->add_option("--cap", f.cap, "Largest number of sources for partition enumeration");
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream out, err;
  CLI::App app{"Certified tripod packings and hitting sets", "tripods"};
  app.require_subcommand(1);

  std::string instance_path, certificate_path, output_path, spec_file;
  std::vector<std::string> spec_tokens;
  EngineFlags flags;
  bool edges = false;
  std::uint64_t seed = 0;

  auto* detect = app.add_subcommand("detect", "Find a tripod");
  detect->add_option("instance", instance_path, "Instance file")->required();

  auto* certify = app.add_subcommand("certify", "Packing of k tripods or a small hitting set");
  certify->add_option("instance", instance_path, "Instance file")->required();
  add_engine_flags(certify, flags);
  certify->add_flag("--edges", edges, "Edge-disjoint packings and edge hitting sets");
  certify->add_option("-o,--output", output_path, "Write the certificate here");

  auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("certificate", certificate_path, "Certificate file")->required();

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("spec", spec_tokens, "Generator and key=value parameters")->required();
  auto* seed_opt = gen->add_option("--seed", seed, "Random seed");

  auto* bounds = app.add_subcommand("bounds", "Print the bound table");
  add_engine_flags(bounds, flags);

  auto* bench = app.add_subcommand("bench", "Certify every spec of a file, one CSV row each");
  bench->add_option("specs", spec_file, "File with one generator spec per line")->required();
  add_engine_flags(bench, flags);
  bench->add_flag("--edges", edges, "Use the edge-disjoint certifier");
  auto* bench_seed = bench->add_option("--seed", seed, "Seed override for every spec");

  auto* dot = app.add_subcommand("dot", "Export an instance to DOT");
  dot->add_option("instance", instance_path, "Instance file")->required();
  dot->add_option("--certificate", certificate_path, "Highlight a certificate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return {code == 0 ? 0 : kExitInput, out.str(), err.str()};
  }

  try {
    if (detect->parsed()) {
      InstanceDocument inst = parse_instance(read_file(instance_path));
      if (auto r = find_tripod(inst.graph)) {
        out << describe(*r, inst);
        result.status = kExitFound;
      } else {
        out << "no tripod\n";
        result.status = kExitNegative;
      }
    } else if (certify->parsed()) {
      InstanceDocument inst = parse_instance(read_file(instance_path));
      EngineConfig cfg = flags.config();
      CertificateDocument doc =
          edges ? make_document(corollary2_certify(inst.graph, flags.k, cfg), flags.k,
                                cfg.bounds, true)
                : make_document(theorem1_certify(inst.graph, flags.k, cfg), flags.k,
                                cfg.bounds, true);
      if (auto v = verify_document(inst, doc); !v) {
        throw SoundnessError("emitted certificate failed verification: " + v.reason());
      }
      const std::string text = print_certificate(doc, inst);
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!(file << text)) throw PreconditionError("cannot write '" + output_path + "'");
      }
      result.status = is_packing_kind(doc.kind) ? kExitFound : kExitNegative;
    } else if (verify->parsed()) {
      InstanceDocument inst = parse_instance(read_file(instance_path));
      CertificateDocument doc = parse_certificate(read_file(certificate_path), inst);
      if (auto v = verify_document(inst, doc); v) {
        out << "valid " << to_string(doc.kind) << " certificate for k=" << doc.k << "\n";
        result.status = kExitFound;
      } else {
        out << "invalid: " << v.reason() << "\n";
        std::optional<Tripod> witness;
        if (doc.kind == DocumentKind::kHittingSet &&
            std::all_of(doc.hitting_set.begin(), doc.hitting_set.end(),
                        [&](Vertex x) { return inst.graph.graph.has_vertex(x); })) {
          witness = find_tripod(delete_vertices(inst.graph, doc.hitting_set));
        } else if (doc.kind == DocumentKind::kEdgeHittingSet) {
          witness = find_tripod(delete_edges(inst.graph, doc.edges));
        }
        if (witness) out << "surviving " << describe(*witness, inst);
        result.status = kExitNegative;
      }
    } else if (gen->parsed()) {
      std::string text;
      for (const std::string& t : spec_tokens) text += (text.empty() ? "" : " ") + t;
      InstanceSpec spec = InstanceSpec::parse(text);
      if (seed_opt->count() > 0) spec.seed = seed;
      GeneratedInstance g = generate(spec);
      out << "# " << spec.to_string() << "\n"
          << print_instance(make_instance(g.graph, g.names));
    } else if (bounds->parsed()) {
      EngineConfig cfg = flags.config();
      const BoundTable& b = cfg.bounds;
      const auto k = static_cast<long>(flags.k);
      out << "k " << k << "\n"
          << "g5 " << b.g5(k) << "\n"
          << "g10(g5(k)) " << b.g10(b.g5(k)) << "\n"
          << "g9 " << b.g9(k) << "\n"
          << "g4_ramsey " << b.g4_ramsey(k) << "\n"
          << "g4_iter " << b.g4_iter(k) << "\n"
          << "route " << to_string(b.route()) << "\n"
          << "f1 " << b.f1(k) << "\n";
    } else if (bench->parsed()) {
      EngineConfig cfg = flags.config();
      std::istringstream lines(read_file(spec_file));
      std::string line;
      out << "spec,k,outcome,size,verified,seconds\n";
      while (std::getline(lines, line)) {
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        std::string text;
        for (const Token& t : tokens) text += (text.empty() ? "" : " ") + t.text;
        InstanceSpec spec = InstanceSpec::parse(text);
        if (bench_seed->count() > 0) spec.seed = seed;
        const auto start = std::chrono::steady_clock::now();
        std::string outcome;
        std::size_t size = 0;
        bool ok = false;
        try {
          GeneratedInstance g = generate(spec);
          if (edges) {
            EdgeCertificate c = corollary2_certify(g.graph, flags.k, cfg);
            outcome = c.kind == CertificateKind::kPacking ? "edge-packing" : "edge-hitting-set";
            size = c.kind == CertificateKind::kPacking ? c.packing.size() : c.hitting_set.size();
            ok = static_cast<bool>(verify_edge_certificate(g.graph, flags.k, c));
          } else {
            Certificate c = theorem1_certify(g.graph, flags.k, cfg);
            outcome = c.kind == CertificateKind::kPacking ? "packing" : "hitting-set";
            size = c.kind == CertificateKind::kPacking ? c.packing.size() : c.hitting_set.size();
            ok = static_cast<bool>(verify_certificate(g.graph, flags.k, c));
          }
        } catch (const std::exception& e) {
          outcome = std::string("error:") +
                    (dynamic_cast<const PreconditionError*>(&e) ? "input" : "internal");
        }
        const double seconds = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
        out << '"' << spec.to_string() << "\"," << flags.k << ',' << outcome << ','
            << size << ',' << (ok ? "yes" : "no") << ',' << std::fixed
            << std::setprecision(6) << seconds << '\n';
        out.unsetf(std::ios::fixed);
      }
    } else if (dot->parsed()) {
      InstanceDocument inst = parse_instance(read_file(instance_path));
      if (certificate_path.empty()) {
        out << to_dot(inst);
      } else {
        CertificateDocument doc = parse_certificate(read_file(certificate_path), inst);
        out << to_dot(inst, &doc);
      }
    }
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    result.status = kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    result.status = kExitInternal;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace tripods
