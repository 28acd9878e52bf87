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

#ifndef TRIPODS_ERRORS_HPP_
#define TRIPODS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tripods {

// Input violates the contract of the operation it was passed to.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A terminal of a migration digraph has the wrong degree for the
// edge-disjoint reduction. Carries the offending vertex.
class TerminalDegreeError : public PreconditionError {
 public:
  TerminalDegreeError(const std::string& what, int vertex)
      : PreconditionError(what), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

// Malformed instance or certificate text, with a 1-based position.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, int line, int column)
      : PreconditionError(std::to_string(line) + ":" + std::to_string(column) +
                          ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A certificate produced internally failed its own verification. This is a
// bug, never an input problem.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The configured g5 was too optimistic for a step whose success the proofs
// only guarantee with the true bound.
class BoundShortfallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search hit its configured size or work cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An independence oracle contradicted the matroid axioms.
class MatroidAxiomError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tripods

#endif  // TRIPODS_ERRORS_HPP_
