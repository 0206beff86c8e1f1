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

#include "fpcsat/dimacs.h"

#include <charconv>
#include <optional>

#include "fpcsat/solver.h"

namespace fpcsat {
namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view tok) {
  std::int64_t value = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || first == ptr) return std::nullopt;
  return value;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  auto v = to_int(tok);
  if (!v || *v < 0) throw DimacsParseError(line, std::string("malformed header: bad ") + what + " '" + std::string(tok) + "'");
  return static_cast<std::size_t>(*v);
}

}  // namespace

DimacsDocument parse_dimacs(std::string_view text) {
  DimacsDocument doc;
  bool have_header = false;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) {
      if (eol == text.size()) break;
      continue;
    }
    const char lead = line[first];
    if (lead == 'c') {
      std::string_view body = line.substr(first + 1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      doc.comments.emplace_back(body);
      continue;
    }
    if (lead == '%') break;
    if (lead == 'p') {
      if (have_header) throw DimacsParseError(line_no, "duplicate header");
      if (!pending.empty()) throw DimacsParseError(line_no, "header inside an unterminated clause");
      auto toks = split_tokens(line.substr(first));
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf") {
        throw DimacsParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      doc.declared_vars = parse_count(toks[2], line_no, "variable count");
      doc.declared_clauses = parse_count(toks[3], line_no, "clause count");
      have_header = true;
      continue;
    }

    for (auto tok : split_tokens(line.substr(first))) {
      auto value = to_int(tok);
      if (!value) throw DimacsParseError(line_no, "non-integer token '" + std::string(tok) + "'");
      if (!have_header) throw DimacsParseError(line_no, "clause data before 'p cnf' header");
      if (*value == 0) {
        std::size_t dups = 0;
        doc.clauses.push_back(Clause::collect(std::move(pending), dups));
        doc.warnings.duplicate_literals += dups;
        pending.clear();
        continue;
      }
      Literal lit = [&] {
        try {
          return Literal::from_dimacs(*value);
        } catch (const Error& e) {
          throw DimacsParseError(line_no, e.what());
        }
      }();
      if (lit.var() > doc.declared_vars) {
        ++doc.warnings.undeclared_variables;
        doc.declared_vars = lit.var();
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(lit);
    }
  }

  if (!pending.empty()) throw DimacsParseError(pending_line, "clause not terminated by 0 at end of input");
  if (!have_header) throw DimacsParseError(line_no, "missing 'p cnf' header");
  doc.warnings.clause_count_mismatch = doc.clauses.size() != doc.declared_clauses;
  return doc;
}

std::string write_dimacs(const Formula& f) {
  std::string out = "p cnf " + std::to_string(f.max_var()) + " " + std::to_string(f.size()) + "\n";
  for (const auto& c : f) {
    for (Literal l : c) {
      out += std::to_string(l.dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::string model_line(const Assignment& a) {
  std::string out = "v";
  for (Var v : a.assigned_vars()) {
    out += ' ';
    if (!*a.get(v)) out += '-';
    out += std::to_string(v);
  }
  return out + " 0\n";
}

std::string write_result(const SolveResult& r) {
  switch (r.verdict) {
    case Verdict::kSat: {
      std::string out = "s SATISFIABLE\n";
      for (const auto& m : r.models) out += model_line(m);
      return out;
    }
    case Verdict::kUnsat:
      return "s UNSATISFIABLE\n";
    case Verdict::kResourceExceeded:
      return "s UNKNOWN\n";
  }
  return "s UNKNOWN\n";
}

}  // namespace fpcsat
