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

// Bit-sliced truth-table kernels.
//
// Assignment t over an ordered variable set gives the variable at position p
// the value of bit p of t. Bit t of the table is 1 iff the formula is true
// under assignment t, packed 64 assignments per word. Positions 0..5 vary
// inside a word; position p >= 6 is bit (p - 6) of the word index.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fpcsat/cnf.h"

namespace fpcsat::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

/// Flattened clause list over variable positions.
struct CompiledCnf {
  std::size_t num_vars = 0;
  /// Clause i spans literals[offsets[i], offsets[i+1]).
  std::vector<std::uint32_t> offsets{0};
  /// (position << 1) | negated
  std::vector<std::uint32_t> literals;

  std::size_t num_clauses() const { return offsets.size() - 1; }
};

/// Largest variable count a table can be built for.
inline constexpr std::size_t kMaxTableVars = 40;

/// Throws UnassignedVariableError if `f` mentions a variable outside `vars`.
CompiledCnf compile(const Formula& f, const VariableSet& vars);

/// Words needed for the full table of `num_vars` variables.
std::size_t table_words(std::size_t num_vars);

/// Best kernel set this binary was built with and the CPU supports.
Isa detected_isa();
/// Kernel set used by the dispatching entry points.
Isa active_isa();
/// Forces a kernel set (nullopt restores detection). Throws Error if the
/// requested set is unavailable.
void set_isa(std::optional<Isa> isa);
bool isa_available(Isa isa);

/// Fills out[k] with table word first_word + k. Bits past 2^num_vars are 0.
void truth_table(const CompiledCnf& cnf, std::size_t first_word, std::span<std::uint64_t> out);
std::uint64_t count_ones(std::span<const std::uint64_t> words);

namespace scalar {
void truth_table(const CompiledCnf& cnf, std::size_t first_word, std::span<std::uint64_t> out);
std::uint64_t count_ones(std::span<const std::uint64_t> words);
}  // namespace scalar

#if defined(FPCSAT_HAVE_AVX2)
namespace avx2 {
void truth_table(const CompiledCnf& cnf, std::size_t first_word, std::span<std::uint64_t> out);
std::uint64_t count_ones(std::span<const std::uint64_t> words);
}  // namespace avx2
#endif

}  // namespace fpcsat::simd
