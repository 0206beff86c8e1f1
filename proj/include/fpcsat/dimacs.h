// Copyright 2026-present the fpcsat authors
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fpcsat/cnf.h"

namespace fpcsat {

struct SolveResult;

class DimacsParseError : public Error {
 public:
  DimacsParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct DimacsWarnings {
  /// Repeated literals collapsed inside a single clause.
  std::size_t duplicate_literals = 0;
  /// Literals whose variable exceeded the declared count.
  std::size_t undeclared_variables = 0;
  bool clause_count_mismatch = false;
};

struct DimacsDocument {
  std::size_t declared_vars = 0;
  std::size_t declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> comments;
  DimacsWarnings warnings;

  /// The clause set with duplicates dropped (original_count keeps them).
  Formula formula() const { return Formula(clauses); }
};

/// Parses DIMACS CNF. Clauses may span lines and share lines. Parsing stops
/// at a line starting with '%' (SATLIB trailer).
DimacsDocument parse_dimacs(std::string_view text);

/// Header declares the largest variable index; clauses in formula order.
std::string write_dimacs(const Formula& f);

/// SAT-competition style "s ..." line plus one "v ... 0" line per model.
std::string write_result(const SolveResult& r);

/// Literals true under `a`, ascending by variable, 0-terminated.
std::string model_line(const Assignment& a);

}  // namespace fpcsat
