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

#include "fpcsat/oracle.h"
#include "test_util.h"

namespace fpcsat {
namespace {

using testing::C;

const Formula kIllustration{C({-1, -2}), C({3}), C({-1}), C({1, -2, -3})};

TEST(BruteForceTest, Illustration) {
  const auto r = brute_force_sat(kIllustration);
  EXPECT_TRUE(r.satisfiable);
  EXPECT_EQ(r.model_count, 1U);
  ASSERT_EQ(r.models.size(), 1U);
  EXPECT_EQ(r.models[0].get(1), std::optional<bool>(false));
  EXPECT_EQ(r.models[0].get(2), std::optional<bool>(false));
  EXPECT_EQ(r.models[0].get(3), std::optional<bool>(true));
  EXPECT_EQ(r.falsified_fpc_per_model[0], C({1, 2, -3}));
}

TEST(BruteForceTest, EdgeCases) {
  EXPECT_FALSE(brute_force_sat(Formula{Clause{}}).satisfiable);

  const auto empty = brute_force_sat(Formula{});
  EXPECT_TRUE(empty.satisfiable);
  EXPECT_EQ(empty.model_count, 1U);
  ASSERT_EQ(empty.models.size(), 1U);
  EXPECT_EQ(empty.models[0].assigned_count(), 0U);

  const auto taut = brute_force_sat(Formula{C({1, -1})});
  EXPECT_EQ(taut.model_count, 2U);
}

TEST(BruteForceTest, ModelLimitTruncatesListOnly) {
  const auto r = brute_force_sat(Formula{C({1, 2, 3})}, kDefaultOracleVarLimit, 2);
  EXPECT_EQ(r.model_count, 7U);
  EXPECT_EQ(r.models.size(), 2U);
}

TEST(BruteForceTest, LimitIsEnforced) {
  std::vector<Clause> wide;
  for (std::int64_t v = 1; v <= 21; ++v) wide.push_back(C({v}));
  EXPECT_THROW(brute_force_sat(Formula(wide)), LimitExceededError);
  EXPECT_THROW(brute_force_sat(Formula{C({1, 2, 3})}, 2), LimitExceededError);
  EXPECT_THROW(enumerate_fpcs(VariableSet::range(5), 4), LimitExceededError);
  EXPECT_THROW(complete_formula(VariableSet::range(13)), LimitExceededError);
}

TEST(EnumerateFpcsTest, Examples) {
  EXPECT_EQ(enumerate_fpcs({1, 2}), (std::vector<Clause>{C({1, 2}), C({1, -2}), C({-1, 2}), C({-1, -2})}));
  EXPECT_EQ(enumerate_fpcs({}), std::vector<Clause>{Clause{}});
  EXPECT_EQ(enumerate_fpcs(VariableSet::range(3)).size(), 8U);
}

TEST(ConditionCheckTest, Examples) {
  EXPECT_EQ(condition_check(Formula{C({1})}), std::vector<Clause>{C({-1})});
  EXPECT_EQ(condition_check(Formula{C({1}), C({-1})}), std::vector<Clause>{});
  EXPECT_EQ(condition_check(kIllustration), std::vector<Clause>{C({1, 2, -3})});
  EXPECT_EQ(condition_check(Formula{}), std::vector<Clause>{Clause{}});
  EXPECT_TRUE(condition_check(Formula{Clause{}}).empty());

  // Over a wider declared set the clause leaves the siblings of x2 open too.
  EXPECT_EQ(condition_check(Formula{C({1})}, {1, 2}), (std::vector<Clause>{C({-1, 2}), C({-1, -2})}));
  EXPECT_THROW(condition_check(Formula{C({3})}, {1, 2}), UnassignedVariableError);
}

TEST(FalsifiedFpcTest, Examples) {
  Assignment a;
  a.set(1, true);
  a.set(2, false);
  EXPECT_EQ(falsified_fpc(a, {1, 2}), C({-1, 2}));
  EXPECT_FALSE(evaluate_clause(falsified_fpc(a, {1, 2}), a));
  EXPECT_THROW(falsified_fpc(a, {1, 2, 3}), UnassignedVariableError);
}

TEST(PowerSetTest, Examples) {
  EXPECT_TRUE(power_set(C({1, -2})).same_clauses(Formula{Clause{}, C({1}), C({-2}), C({1, -2})}));
  EXPECT_TRUE(power_set(Clause{}).same_clauses(Formula{Clause{}}));
  EXPECT_EQ(power_set(C({1, 2, 3, 4})).size(), 16U);
}

TEST(CompleteFormulaTest, Examples) {
  const Formula f2{Clause{}, C({1}),      C({-1}),     C({2}),      C({-2}),
                   C({1, 2}), C({1, -2}), C({-1, 2}), C({-1, -2})};
  EXPECT_TRUE(complete_formula({1, 2}).same_clauses(f2));
  EXPECT_TRUE(complete_formula({}).same_clauses(Formula{Clause{}}));
  EXPECT_EQ(complete_formula(VariableSet::range(3)).size(), 27U);
}

TEST(CompleteFormulaTest, BothConstructionsAgree) {
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto v = VariableSet::range(n);
    const auto a = complete_formula(v);
    const auto b = complete_formula_from_power_sets(v);
    ASSERT_TRUE(a.same_clauses(b)) << "n=" << n;
    std::size_t expected = 1;
    for (std::size_t k = 0; k < n; ++k) expected *= 3;
    ASSERT_EQ(a.size(), expected);
  }
}

// Removing one power set from the complete formula leaves exactly the model
// that falsifies that clause; adding any removed clause back kills it.
TEST(CompleteMinusPowerSetTest, ExhaustiveSmall) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto v = VariableSet::range(n);
    ASSERT_FALSE(brute_force_sat(complete_formula(v)).satisfiable);
    for (const auto& fpc : enumerate_fpcs(v)) {
      const auto f = complete_minus_power_set(v, fpc);
      const auto r = brute_force_sat(f);
      ASSERT_EQ(r.model_count, 1U);
      ASSERT_EQ(r.falsified_fpc_per_model[0], fpc);
      ASSERT_EQ(condition_check(f, v), std::vector<Clause>{fpc});

      for (const auto& back : power_set(fpc)) {
        std::vector<Clause> clauses(f.begin(), f.end());
        clauses.push_back(back);
        ASSERT_FALSE(brute_force_sat(Formula(clauses)).satisfiable);
      }
    }
  }
  EXPECT_THROW(complete_minus_power_set({1, 2}, C({1})), Error);
}

TEST(OraclePropertyTest, ModelsBijectWithSurvivingFpcs) {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t n = 1 + iter % 10;
    const auto f = testing::random_formula(rng, n, 4 * n);
    const auto r = brute_force_sat(f);
    const auto naive = testing::naive_models(f);
    ASSERT_EQ(r.model_count, naive.size());
    ASSERT_EQ(r.models, naive);  // same ascending index order

    auto survivors = condition_check(f);
    auto falsified = r.falsified_fpc_per_model;
    std::sort(survivors.begin(), survivors.end());
    std::sort(falsified.begin(), falsified.end());
    ASSERT_EQ(survivors, falsified) << "iter " << iter;
  }
}

TEST(OraclePropertyTest, SubsetOfFpcImpliesFpcFalseImpliesClauseFalse) {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t n = 1 + iter % 8;
    const auto v = VariableSet::range(n);
    const auto c = testing::random_proper_clause(rng, n, 1 + iter % n);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
      const auto a = testing::assignment_at(v, t);
      const auto fpc = falsified_fpc(a, v);
      if (is_subset(c, fpc)) ASSERT_FALSE(evaluate_clause(c, a));
      if (!evaluate_clause(c, a)) ASSERT_TRUE(is_subset(c, fpc));
    }
  }
}

}  // namespace
}  // namespace fpcsat
