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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "fpcsat/simd/truth_table.h"
#include "truth_table_common.h"

namespace fpcsat::simd::avx2 {

// Four consecutive table words per vector.
void truth_table(const CompiledCnf& cnf, std::size_t first_word, std::span<std::uint64_t> out) {
  const std::size_t n = cnf.num_vars;
  const std::size_t blocks = out.size() / 4;
  std::vector<__m256i> var_vec(n);
  const __m256i ones = _mm256_set1_epi64x(-1);
  const __m256i tail = _mm256_set1_epi64x(static_cast<long long>(detail::tail_mask(n)));

  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t w = first_word + 4 * b;
    for (std::size_t p = 0; p < n; ++p) {
      if (p < 6) {
        var_vec[p] = _mm256_set1_epi64x(static_cast<long long>(detail::kInWordPattern[p]));
      } else {
        var_vec[p] = _mm256_setr_epi64x(static_cast<long long>(detail::var_word(p, w)),
                                        static_cast<long long>(detail::var_word(p, w + 1)),
                                        static_cast<long long>(detail::var_word(p, w + 2)),
                                        static_cast<long long>(detail::var_word(p, w + 3)));
      }
    }

    __m256i acc = ones;
    for (std::size_t c = 0; c + 1 < cnf.offsets.size(); ++c) {
      __m256i clause = _mm256_setzero_si256();
      for (std::uint32_t i = cnf.offsets[c]; i < cnf.offsets[c + 1]; ++i) {
        const std::uint32_t lit = cnf.literals[i];
        const __m256i neg = (lit & 1U) ? ones : _mm256_setzero_si256();
        clause = _mm256_or_si256(clause, _mm256_xor_si256(var_vec[lit >> 1], neg));
      }
      acc = _mm256_and_si256(acc, clause);
      if (_mm256_testz_si256(acc, acc)) break;
    }
    acc = _mm256_and_si256(acc, tail);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + 4 * b), acc);
  }

  if (const std::size_t done = 4 * blocks; done < out.size()) {
    scalar::truth_table(cnf, first_word + done, out.subspan(done));
  }
}

// Nibble-lookup popcount with per-lane horizontal sums.
std::uint64_t count_ones(std::span<const std::uint64_t> words) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i sum = _mm256_setzero_si256();
  const std::size_t blocks = words.size() / 4;
  for (std::size_t b = 0; b < blocks; ++b) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + 4 * b));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    sum = _mm256_add_epi64(sum, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), sum);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  return total + scalar::count_ones(words.subspan(4 * blocks));
}

}  // namespace fpcsat::simd::avx2
