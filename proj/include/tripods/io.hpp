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

// Instance and certificate documents, DOT export, and the command-line
// front end.
//
// Instance format, one directive per line, '#' starts a comment:
//
//   format tripod-instance 1
//   vertex s1 s2 c t
//   source s1 s2
//   sink t
//   edge s1 c
//
// Vertex names are any tokens without whitespace or '#'. Identifiers are
// assigned in declaration order. Certificates are JSON documents that
// refer to vertices by name.

#ifndef TRIPODS_IO_HPP_
#define TRIPODS_IO_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tripods/bigint.hpp"
#include "tripods/bounds.hpp"
#include "tripods/digraph.hpp"
#include "tripods/tripod.hpp"

namespace tripods {

struct InstanceDocument {
  MigrationDigraph graph;
  // names[v] is the name of vertex v; vertices are 0..names.size()-1.
  std::vector<std::string> names;

  // Throws PreconditionError for unknown names.
  Vertex id(const std::string& name) const;

  friend bool operator==(const InstanceDocument&,
                         const InstanceDocument&) = default;
};

// Throws ParseError naming the line and column of the first problem:
// unknown directive, bad header, duplicate vertex or edge, loop, undeclared
// endpoint.
InstanceDocument parse_instance(const std::string& text);
std::string print_instance(const InstanceDocument& doc);

// Instance over vertices 0..n-1 named by `names`, or "v<i>" when empty.
InstanceDocument make_instance(const MigrationDigraph& d,
                               std::vector<std::string> names = {});

enum class DocumentKind { kPacking, kHittingSet, kEdgePacking, kEdgeHittingSet };

std::string to_string(DocumentKind kind);

struct CertificateDocument {
  DocumentKind kind = DocumentKind::kHittingSet;
  std::size_t k = 1;
  std::vector<Tripod> tripods;
  VertexSet hitting_set;
  std::vector<Edge> edges;
  std::vector<std::string> provenance;
  std::string g5 = "t";
  Route route = Route::kRamsey;
  BigInt f1 = 0;
  bool verified = false;

  friend bool operator==(const CertificateDocument&,
                         const CertificateDocument&) = default;
};

CertificateDocument make_document(const Certificate& cert, std::size_t k,
                                  const BoundTable& bounds, bool verified);
CertificateDocument make_document(const EdgeCertificate& cert, std::size_t k,
                                  const BoundTable& bounds, bool verified);

// Throws ParseError on malformed JSON and PreconditionError on unknown
// vertex names or fields of the wrong type.
CertificateDocument parse_certificate(const std::string& text,
                                      const InstanceDocument& instance);
std::string print_certificate(const CertificateDocument& doc,
                              const InstanceDocument& instance);

// Re-checks the payload against the instance and the bound snapshot
// against a freshly computed f1(k). The verified flag is not trusted.
Verdict verify_document(const InstanceDocument& instance,
                        const CertificateDocument& doc);

std::string to_dot(const InstanceDocument& instance,
                   const CertificateDocument* certificate = nullptr);

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

// Exit status: 0 found or valid, 1 negative result, 2 input error, 3
// internal error.
inline constexpr int kExitFound = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

// Runs one command; args exclude the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace tripods

#endif  // TRIPODS_IO_HPP_
