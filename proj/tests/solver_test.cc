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

#include <set>

#include "fpcsat/oracle.h"
#include "fpcsat/solver.h"
#include "test_util.h"

namespace fpcsat {
namespace {

using testing::C;

const Formula kIllustration{C({-1, -2}), C({3}), C({-1}), C({1, -2, -3})};

std::set<std::vector<Var>> true_sets(const std::vector<Assignment>& models) {
  std::set<std::vector<Var>> out;
  for (const auto& m : models) {
    std::vector<Var> on;
    for (Var v : m.assigned_vars()) {
      if (*m.get(v)) on.push_back(v);
    }
    out.insert(on);
  }
  return out;
}

TEST(CheckSatTest, Illustration) {
  SolveConfig cfg;
  cfg.report_all_models = true;
  const auto r = check_sat(kIllustration, cfg);
  ASSERT_EQ(r.verdict, Verdict::kSat);
  EXPECT_EQ(r.absent_fpcs, std::vector<Clause>{C({-3, 1, 2})});
  ASSERT_EQ(r.models.size(), 1U);
  Assignment expected;
  expected.set(1, false);
  expected.set(2, false);
  expected.set(3, true);
  EXPECT_EQ(r.models[0], expected);
  EXPECT_EQ(r.stats.clauses_processed, 4U);
}

TEST(CheckSatTest, EmptyClauseIsUnsat) {
  const auto r = check_sat(Formula{Clause{}});
  EXPECT_EQ(r.verdict, Verdict::kUnsat);
  EXPECT_TRUE(r.models.empty());
  EXPECT_EQ(r.stats.clauses_processed, 0U);
  EXPECT_EQ(check_sat(Formula{C({1}), Clause{}, C({2})}).verdict, Verdict::kUnsat);
}

TEST(CheckSatTest, AllFourFullyPopulatedClausesIsUnsat) {
  const Formula f{C({1, 2}), C({1, -2}), C({-1, 2}), C({-1, -2})};
  ASSERT_FALSE(testing::naive_sat(f));  // oracle first
  EXPECT_EQ(check_sat(f).verdict, Verdict::kUnsat);
}

TEST(CheckSatTest, EmptyFormulaIsSatWithEmptyModel) {
  const auto r = check_sat(Formula{});
  ASSERT_EQ(r.verdict, Verdict::kSat);
  ASSERT_EQ(r.models.size(), 1U);
  EXPECT_EQ(r.models[0].assigned_count(), 0U);
  EXPECT_EQ(r.absent_fpcs, std::vector<Clause>{Clause{}});
}

TEST(CheckSatTest, TautologiesAreSkipped) {
  const auto r = check_sat(Formula{C({1, -1}), C({2}), C({2})});
  ASSERT_EQ(r.verdict, Verdict::kSat);
  EXPECT_EQ(r.stats.tautologies_skipped, 1U);
  EXPECT_EQ(r.stats.clauses_processed, 1U);
  // x1 only occurs in the tautology, so it stays out of the model.
  EXPECT_FALSE(r.models[0].is_assigned(1));
  EXPECT_EQ(r.models[0].get(2), std::optional<bool>(true));
}

TEST(CheckSatTest, DuplicatesReported) {
  const auto r = check_sat(Formula{C({1}), C({1}), C({1})});
  EXPECT_EQ(r.stats.duplicates_removed, 2U);
}

TEST(CheckSatTest, BudgetTripIsNotUnsat) {
  SolveConfig cfg;
  cfg.node_budget = 4;
  const Formula f{C({1, 2, 3, 4})};
  const auto r = check_sat(f, cfg);
  EXPECT_EQ(r.verdict, Verdict::kResourceExceeded);
  EXPECT_TRUE(r.models.empty());
  EXPECT_LE(r.stats.peak_nodes, 4U);
}

TEST(CheckSatTest, ExpiredTimeoutIsResourceExceeded) {
  SolveConfig cfg;
  cfg.timeout = std::chrono::milliseconds(-1);
  const auto r = check_sat(Formula{C({1})}, cfg);
  EXPECT_EQ(r.verdict, Verdict::kResourceExceeded);
  EXPECT_TRUE(r.stats.timed_out);
}

TEST(CheckSatTest, FirstModelIsFirstDepthFirstSurvivor) {
  const auto r = check_sat(Formula{C({1, 2})});
  ASSERT_EQ(r.absent_fpcs.size(), 1U);
  // Left (negative) edges first: {~x1, ~x2} survives first -> x1 = x2 = 1.
  EXPECT_EQ(r.absent_fpcs[0], C({-1, -2}));
}

TEST(CheckSatTest, ObserverSeesEveryClause) {
  SolveConfig cfg;
  std::vector<Clause> seen;
  cfg.on_clause = [&](const Clause& c, const FpcTree&) { seen.push_back(c); };
  check_sat(kIllustration, cfg);
  EXPECT_EQ(seen, (std::vector<Clause>{C({3}), C({-1}), C({-1, -2}), C({1, -2, -3})}));

  seen.clear();
  cfg.sort_clauses = false;
  check_sat(kIllustration, cfg);
  EXPECT_EQ(seen, (std::vector<Clause>{C({-1, -2}), C({3}), C({-1}), C({1, -2, -3})}));
}

TEST(CheckSatTest, PreprocessingDecidesOrForces) {
  SolveConfig cfg;
  cfg.enable_cardinality_preprocessing = true;
  const auto unsat = check_sat(Formula{C({1}), C({-1})}, cfg);
  EXPECT_EQ(unsat.verdict, Verdict::kUnsat);
  EXPECT_TRUE(unsat.stats.decided_by_preprocessing);

  cfg.report_all_models = true;
  const auto forced = check_sat(Formula{C({1}), C({1, 2}), C({1, -2})}, cfg);
  ASSERT_EQ(forced.verdict, Verdict::kSat);
  EXPECT_EQ(forced.stats.forced_literals, 1U);
  for (const auto& m : forced.models) EXPECT_EQ(m.get(1), std::optional<bool>(true));
}

TEST(ModelFromFpcTest, Examples) {
  Assignment a;
  a.set(1, false);
  a.set(2, false);
  EXPECT_EQ(model_from_fpc(C({1, 2})), a);

  Assignment b;
  b.set(3, true);
  b.set(1, false);
  b.set(2, false);
  EXPECT_EQ(model_from_fpc(C({-3, 1, 2})), b);
  EXPECT_EQ(model_from_fpc(Clause{}).assigned_count(), 0U);
  EXPECT_THROW(model_from_fpc(C({1, -1})), TautologyError);
}

// Randomized agreement with the naive evaluator: verdict, soundness of
// every model, and with all models the exact satisfying set.
TEST(CheckSatPropertyTest, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 1500; ++iter) {
    const std::size_t n = 1 + iter % 10;
    const auto f = testing::random_formula(rng, n, 4 * n);
    SolveConfig cfg;
    cfg.report_all_models = true;
    const auto r = check_sat(f, cfg);
    const auto expected = testing::naive_models(f);
    ASSERT_EQ(r.verdict == Verdict::kSat, !expected.empty()) << "iter " << iter;

    const auto vars = variables_of(f);
    for (const auto& m : r.models) ASSERT_TRUE(evaluate_formula(f, testing::extend_false(m, vars)));
    if (r.stats.tautologies_skipped == 0) {
      ASSERT_EQ(true_sets(r.models), true_sets(expected)) << "iter " << iter;
    }
  }
}

TEST(CheckSatPropertyTest, SortingAndPreprocessingNeverChangeVerdict) {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 800; ++iter) {
    const std::size_t n = 1 + iter % 8;
    const auto f = testing::random_formula(rng, n, 5 * n);
    const auto base = check_sat(f).verdict;
    for (bool sort : {false, true}) {
      for (bool pre : {false, true}) {
        SolveConfig cfg;
        cfg.sort_clauses = sort;
        cfg.enable_cardinality_preprocessing = pre;
        ASSERT_EQ(check_sat(f, cfg).verdict, base);
      }
    }
  }
}

TEST(CheckSatPropertyTest, AddingTautologiesNeverChangesVerdict) {
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 800; ++iter) {
    const std::size_t n = 2 + iter % 8;
    const auto f = testing::random_formula(rng, n, 4 * n);
    std::vector<Clause> clauses(f.begin(), f.end());
    for (int k = 0; k < 3; ++k) {
      auto c = testing::random_proper_clause(rng, n, 2);
      std::vector<Literal> lits(c.begin(), c.end());
      lits.push_back(negate(lits.front()));
      clauses.emplace_back(std::move(lits));
    }
    ASSERT_EQ(check_sat(Formula(clauses)).verdict, check_sat(f).verdict);
  }
}

}  // namespace
}  // namespace fpcsat
