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

#include <bit>

#include "fpcsat/simd/truth_table.h"
#include "truth_table_common.h"

namespace fpcsat::simd::scalar {

void truth_table(const CompiledCnf& cnf, std::size_t first_word, std::span<std::uint64_t> out) {
  const std::size_t n = cnf.num_vars;
  std::vector<std::uint64_t> var_word(n);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t w = first_word + k;
    for (std::size_t p = 0; p < n; ++p) var_word[p] = detail::var_word(p, w);

    std::uint64_t acc = ~std::uint64_t{0};
    for (std::size_t c = 0; c + 1 < cnf.offsets.size() && acc; ++c) {
      std::uint64_t clause = 0;
      for (std::uint32_t i = cnf.offsets[c]; i < cnf.offsets[c + 1]; ++i) {
        const std::uint32_t lit = cnf.literals[i];
        clause |= var_word[lit >> 1] ^ detail::neg_mask(lit);
      }
      acc &= clause;
    }
    out[k] = acc & detail::tail_mask(n);
  }
}

std::uint64_t count_ones(std::span<const std::uint64_t> words) {
  std::uint64_t total = 0;
  for (auto w : words) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

}  // namespace fpcsat::simd::scalar
