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
#include <cstdint>

namespace fpcsat::simd::detail {

// Value of position p (< 6) across the 64 assignments of one word.
inline constexpr std::uint64_t kInWordPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

inline std::uint64_t var_word(std::size_t position, std::size_t word) {
  if (position < 6) return kInWordPattern[position];
  return ((word >> (position - 6)) & 1U) ? ~std::uint64_t{0} : 0;
}

inline std::uint64_t neg_mask(std::uint32_t lit) { return (lit & 1U) ? ~std::uint64_t{0} : 0; }

// Valid assignments in word 0 when fewer than 64 exist.
inline std::uint64_t tail_mask(std::size_t num_vars) {
  return num_vars >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << num_vars)) - 1;
}

}  // namespace fpcsat::simd::detail
