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

#include <algorithm>
#include <atomic>

#include "fpcsat/simd/truth_table.h"

namespace fpcsat::simd {
namespace {

bool cpu_has_avx2() {
#if defined(FPCSAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<int> g_override{-1};

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  return isa == Isa::kScalar || (isa == Isa::kAvx2 && cpu_has_avx2());
}

Isa detected_isa() {
  static const Isa best = cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
  return best;
}

Isa active_isa() {
  const int o = g_override.load(std::memory_order_relaxed);
  return o < 0 ? detected_isa() : static_cast<Isa>(o);
}

void set_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) {
    throw Error("kernel set '" + std::string(to_string(*isa)) + "' is not available on this machine");
  }
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

CompiledCnf compile(const Formula& f, const VariableSet& vars) {
  if (vars.size() > kMaxTableVars) {
    throw LimitExceededError("truth tables support at most " + std::to_string(kMaxTableVars) + " variables");
  }
  CompiledCnf out;
  out.num_vars = vars.size();
  out.offsets.reserve(f.size() + 1);
  for (const auto& c : f) {
    for (Literal l : c) {
      const auto it = std::lower_bound(vars.begin(), vars.end(), l.var());
      if (it == vars.end() || *it != l.var()) {
        throw UnassignedVariableError("variable x" + std::to_string(l.var()) + " is outside the table's variable set");
      }
      const auto position = static_cast<std::uint32_t>(it - vars.begin());
      out.literals.push_back((position << 1) | (l.is_negative() ? 1U : 0U));
    }
    out.offsets.push_back(static_cast<std::uint32_t>(out.literals.size()));
  }
  return out;
}

std::size_t table_words(std::size_t num_vars) {
  return num_vars <= 6 ? 1 : std::size_t{1} << (num_vars - 6);
}

void truth_table(const CompiledCnf& cnf, std::size_t first_word, std::span<std::uint64_t> out) {
#if defined(FPCSAT_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::truth_table(cnf, first_word, out);
#endif
  scalar::truth_table(cnf, first_word, out);
}

std::uint64_t count_ones(std::span<const std::uint64_t> words) {
#if defined(FPCSAT_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::count_ones(words);
#endif
  return scalar::count_ones(words);
}

}  // namespace fpcsat::simd
