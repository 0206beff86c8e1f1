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

#include <gtest/gtest.h>

#include <bit>

#include "fpcsat/oracle.h"
#include "fpcsat/simd/truth_table.h"
#include "test_util.h"

namespace fpcsat::simd {
namespace {

using fpcsat::testing::C;

std::vector<std::uint64_t> table(const CompiledCnf& cnf, std::size_t first, std::size_t words, bool use_scalar) {
  std::vector<std::uint64_t> out(words, 0xdeadbeefULL);
#if defined(FPCSAT_HAVE_AVX2)
  if (!use_scalar) {
    avx2::truth_table(cnf, first, out);
    return out;
  }
#endif
  scalar::truth_table(cnf, first, out);
  return out;
}

bool have_avx2() { return isa_available(Isa::kAvx2); }

TEST(TruthTableTest, ScalarMatchesNaiveEvaluation) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + iter % 11;
    const auto f = fpcsat::testing::random_formula(rng, n, 3 * n);
    const auto vars = variables_of(f);
    const auto cnf = compile(f, vars);
    const auto words = table(cnf, 0, table_words(vars.size()), true);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << vars.size()); ++t) {
      const bool bit = (words[t / 64] >> (t % 64)) & 1U;
      ASSERT_EQ(bit, evaluate_formula(f, fpcsat::testing::assignment_at(vars, t))) << "iter " << iter << " t " << t;
    }
    // Bits past 2^n in a short table stay clear.
    if (vars.size() < 6) ASSERT_EQ(words[0] >> (std::uint64_t{1} << vars.size()), 0U);
  }
}

TEST(TruthTableTest, EmptyAndNullFormulas) {
  const auto none = compile(Formula{}, {});
  EXPECT_EQ(table(none, 0, 1, true)[0], 1U);
  const auto phi = compile(Formula{Clause{}}, {});
  EXPECT_EQ(table(phi, 0, 1, true)[0], 0U);
  EXPECT_THROW(compile(Formula{C({3})}, {1, 2}), UnassignedVariableError);
  EXPECT_THROW(compile(Formula{}, VariableSet::range(41)), LimitExceededError);
}

TEST(TruthTableTest, Avx2MatchesScalar) {
  if (!have_avx2()) GTEST_SKIP() << "avx2 not available";
  std::mt19937_64 rng(62);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = iter % 15;
    const auto f = n == 0 ? Formula{} : fpcsat::testing::random_formula(rng, n, 4 * n);
    const auto vars = VariableSet::range(n);
    const auto cnf = compile(f, vars);
    const std::size_t total = table_words(n);
    // Odd offsets and lengths exercise the scalar tail of the wide kernel.
    const std::size_t first = total > 1 ? rng() % total : 0;
    const std::size_t words = 1 + rng() % (total - first);
    ASSERT_EQ(table(cnf, first, words, false), table(cnf, first, words, true)) << "iter " << iter;
  }
}

TEST(CountOnesTest, Avx2MatchesScalar) {
  std::mt19937_64 rng(63);
  for (std::size_t len : {0, 1, 3, 4, 5, 7, 8, 31, 32, 33, 1000, 4097}) {
    std::vector<std::uint64_t> words(len);
    for (auto& w : words) w = rng();
    std::uint64_t expected = 0;
    for (auto w : words) expected += static_cast<std::uint64_t>(std::popcount(w));
    ASSERT_EQ(scalar::count_ones(words), expected);
#if defined(FPCSAT_HAVE_AVX2)
    if (have_avx2()) ASSERT_EQ(avx2::count_ones(words), expected) << "len " << len;
#endif
  }
}

TEST(DispatchTest, OverrideSelectsKernel) {
  EXPECT_TRUE(isa_available(Isa::kScalar));
  set_isa(Isa::kScalar);
  EXPECT_EQ(active_isa(), Isa::kScalar);
  const auto forced = brute_force_sat(Formula{C({1, 2}), C({-1, 3}), C({-2, -3})});
  set_isa(std::nullopt);
  EXPECT_EQ(active_isa(), detected_isa());
  const auto native = brute_force_sat(Formula{C({1, 2}), C({-1, 3}), C({-2, -3})});
  EXPECT_EQ(forced.model_count, native.model_count);
  EXPECT_EQ(forced.models, native.models);
  if (!have_avx2()) EXPECT_THROW(set_isa(Isa::kAvx2), Error);
  EXPECT_EQ(to_string(Isa::kAvx2), "avx2");
}

}  // namespace
}  // namespace fpcsat::simd
