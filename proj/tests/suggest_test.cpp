/*
 * Copyright 2026 The plix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "plix/suggest.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "plix/indexer.hpp"
#include "plix/synth.hpp"

namespace plix {
namespace {

CorpusIndex make_index(std::unordered_map<std::string, IndexEntry> table) {
  return CorpusIndex(IndexParams{14, 100000, Hierarchy::standard().fingerprint()},
                     std::move(table));
}

TEST(SuggestPattern, PicksTheFeasibleTimestampRule) {
  // Narrow rules carry too much estimated FPR; the generalized one is backed
  // by 5000 columns at 0.04%.
  Hierarchy hierarchy = Hierarchy::standard();
  CorpusIndex index = make_index({
      {plixtest::rule_am_only(), IndexEntry{2.0 / 12.0, 5000}},
      {plixtest::rule_single_digit_hour(), IndexEntry{8.0 / 12.0, 5000}},
      {plixtest::rule_timestamp(), IndexEntry{0.0004, 5000}},
  });
  SolverParams params;
  params.max_fpr = 0.001;
  params.min_coverage = 100;
  auto query = plixtest::timestamp_query_column();
  auto suggestion = suggest_pattern(query, index, hierarchy, params);
  ASSERT_TRUE(suggestion.has_value());
  EXPECT_EQ(suggestion->pattern.key(), plixtest::rule_timestamp());
  EXPECT_NEAR(suggestion->fpr, 0.0004, 1e-12);
  EXPECT_EQ(suggestion->cov, 5000u);
  EXPECT_EQ(suggestion->train_nonconform_count, 0u);
  EXPECT_EQ(suggestion->train_size, query.size());
  EXPECT_TRUE(suggestion->truncated);  // 13-token values blow the cap
}

TEST(SuggestPattern, HeterogeneousColumnHasNoRule) {
  Hierarchy hierarchy = Hierarchy::standard();
  CorpusIndex index = make_index({});
  SolverParams params;
  std::vector<std::string> column = {"9:07", "hello there", "x"};
  EXPECT_FALSE(suggest_pattern(column, index, hierarchy, params).has_value());
}

TEST(SuggestPattern, CoverageObjectiveFlipsTheChoice) {
  Hierarchy hierarchy = Hierarchy::standard();
  std::vector<std::string> column = {"12:07", "9:30"};
  // Both candidates are feasible; objectives disagree on which wins.
  CorpusIndex index = make_index({
      {"<digit>+:<digit>{2}", IndexEntry{0.0001, 5000}},
      {"<num>:<digit>{2}", IndexEntry{0.0005, 200}},
  });
  SolverParams params;
  params.max_fpr = 0.001;
  params.min_coverage = 100;
  auto fpr_pick = suggest_pattern(column, index, hierarchy, params);
  ASSERT_TRUE(fpr_pick.has_value());
  EXPECT_EQ(fpr_pick->pattern.key(), "<digit>+:<digit>{2}");

  params.objective = Objective::kMinCoverage;
  auto cov_pick = suggest_pattern(column, index, hierarchy, params);
  ASSERT_TRUE(cov_pick.has_value());
  EXPECT_EQ(cov_pick->pattern.key(), "<num>:<digit>{2}");
}

TEST(SuggestPattern, UnindexedPatternsAreInfeasible) {
  Hierarchy hierarchy = Hierarchy::standard();
  CorpusIndex index = make_index({{"<digit>+:<digit>{2}", IndexEntry{0.0, 99}}});
  SolverParams params;
  params.min_coverage = 100;  // the only indexed hypothesis sits below m
  std::vector<std::string> column = {"9:07"};
  EXPECT_FALSE(suggest_pattern(column, index, hierarchy, params).has_value());
  params.min_coverage = 99;
  EXPECT_TRUE(suggest_pattern(column, index, hierarchy, params).has_value());
}

TEST(SuggestPattern, MatchesExhaustiveSearchOnRandomCorpora) {
  Hierarchy hierarchy = Hierarchy::standard();
  std::mt19937_64 rng(61);
  std::vector<Pattern> domains = {
      Pattern::parse("<digit>{2}:<digit>{2}"),
      Pattern::parse("<digit>+:<digit>{2}"),
      Pattern::parse("<letter>{2}-<digit>{2}"),
      Pattern::parse("<letter>+.<digit>+"),
  };
  std::uniform_int_distribution<std::size_t> column_count(3, 12);
  std::uniform_int_distribution<std::size_t> value_count(2, 8);
  std::uniform_int_distribution<std::size_t> domain_pick(0, domains.size() - 1);
  std::uniform_real_distribution<double> r_pick(0.0, 0.3);

  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ColumnData> corpus;
    std::size_t columns = column_count(rng);
    for (std::size_t i = 0; i < columns; ++i) {
      ColumnData column{"c" + std::to_string(i),
                        sample_column(domains[domain_pick(rng)], value_count(rng), rng)};
      if (trial % 3 == 0 && i == 0) column.values.push_back("~~");
      corpus.push_back(std::move(column));
    }
    BuildOptions build;
    build.scan.tau = 6;
    CorpusIndex index = build_index_from_columns(corpus, hierarchy, build);
    auto oracle_table = plixtest::oracle_index(corpus, build.scan.tau);

    SolverParams params;
    params.max_fpr = r_pick(rng);
    params.min_coverage = 1 + trial % 3;
    auto query = sample_column(domains[domain_pick(rng)], value_count(rng), rng);

    for (bool minimize_coverage : {false, true}) {
      params.objective =
          minimize_coverage ? Objective::kMinCoverage : Objective::kMinFalsePositiveRate;
      auto got = suggest_pattern(query, index, hierarchy, params);
      auto want = plixtest::oracle_best_pattern(query, oracle_table, params.max_fpr,
                                                params.min_coverage, minimize_coverage);
      ASSERT_EQ(got.has_value(), want.has_value()) << "trial " << trial;
      if (got) {
        ASSERT_EQ(got->pattern.key(), *want) << "trial " << trial;
        EXPECT_LE(got->fpr, params.max_fpr);
        EXPECT_GE(got->cov, params.min_coverage);
      }
    }
  }
}

TEST(SuggestPattern, ObjectiveIsMonotoneInR) {
  Hierarchy hierarchy = Hierarchy::standard();
  std::mt19937_64 rng(67);
  std::vector<ColumnData> corpus;
  for (int i = 0; i < 10; ++i) {
    ColumnData column{"c" + std::to_string(i),
                      sample_column(Pattern::parse("<digit>{2}:<digit>{2}"), 6, rng)};
    if (i % 2 == 0) column.values.push_back("zz");
    corpus.push_back(std::move(column));
  }
  BuildOptions build;
  build.scan.tau = 5;
  CorpusIndex index = build_index_from_columns(corpus, hierarchy, build);
  auto query = sample_column(Pattern::parse("<digit>{2}:<digit>{2}"), 5, rng);

  SolverParams params;
  params.min_coverage = 1;
  double last_objective = 2.0;
  std::size_t last_feasible = 0;
  for (double r : {0.0, 0.01, 0.05, 0.2, 0.5, 1.0}) {
    params.max_fpr = r;
    auto suggestion = suggest_pattern(query, index, hierarchy, params);
    if (!suggestion) {
      EXPECT_EQ(last_feasible, 0u);  // feasible sets only grow with r
      continue;
    }
    if (last_feasible > 0) EXPECT_LE(suggestion->fpr, last_objective + 1e-15);
    last_objective = suggestion->fpr;
    last_feasible = 1;
  }
}

TEST(SuggestWithCut, HomogeneousColumnBehavesLikeThePlainSolver) {
  Hierarchy hierarchy = Hierarchy::standard();
  CorpusIndex index = make_index({{"<digit>+:<digit>{2}", IndexEntry{0.0, 500}}});
  SolverParams params;
  params.min_coverage = 100;
  params.tolerance = 0.05;
  std::vector<std::string> column;
  for (int i = 10; i < 30; ++i) column.push_back(std::to_string(i) + ":15");
  auto plain = suggest_pattern(column, index, hierarchy, params);
  auto cut = suggest_pattern_with_cut(column, index, hierarchy, params);
  ASSERT_TRUE(plain.has_value());
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->pattern.key(), plain->pattern.key());
  EXPECT_EQ(cut->train_nonconform_count, 0u);
  EXPECT_EQ(cut->train_nonconform_ratio, 0.0);
}

TEST(SuggestWithCut, ToleratesOnePercentJunk) {
  Hierarchy hierarchy = Hierarchy::standard();
  CorpusIndex index = make_index({
      {"<digit>+,<digit>+,<digit>+,<digit>+,<digit>+", IndexEntry{0.0005, 2000}},
  });
  SolverParams params;
  params.max_fpr = 0.001;
  params.min_coverage = 100;
  params.tolerance = 0.01;

  std::mt19937_64 rng(71);
  Pattern domain = Pattern::parse("<digit>+,<digit>+,<digit>+,<digit>+,<digit>+");
  std::vector<std::string> column = sample_column(domain, 99, rng);
  column.push_back("-");  // the lone null marker

  EXPECT_FALSE(suggest_pattern(column, index, hierarchy, params).has_value());
  auto suggestion = suggest_pattern_with_cut(column, index, hierarchy, params);
  ASSERT_TRUE(suggestion.has_value());
  EXPECT_EQ(suggestion->pattern.key(), domain.key());
  EXPECT_EQ(suggestion->train_nonconform_count, 1u);
  EXPECT_NEAR(suggestion->train_nonconform_ratio, 0.01, 1e-12);
  EXPECT_LE(suggestion->train_nonconform_ratio, params.tolerance);
  EXPECT_EQ(suggestion->train_size, 100u);

  // The returned pattern really does match at least (1 - theta) of the column.
  std::size_t matched = 0;
  for (const std::string& v : column) {
    if (suggestion->pattern.matches(v)) ++matched;
  }
  EXPECT_GE(static_cast<double>(matched), 0.99 * static_cast<double>(column.size()));
}

TEST(SuggestWithCut, TooMuchJunkMeansNoRule) {
  Hierarchy hierarchy = Hierarchy::standard();
  CorpusIndex index = make_index({{"<digit>{3}-<letter>{2}", IndexEntry{0.0, 1000}}});
  SolverParams params;
  params.min_coverage = 10;
  params.tolerance = 0.05;

  std::mt19937_64 rng(73);
  auto column = sample_column(Pattern::parse("<digit>{3}-<letter>{2}"), 90, rng);
  for (int i = 0; i < 10; ++i) column.push_back("??");  // 10% junk vs theta = 5%
  EXPECT_FALSE(suggest_pattern_with_cut(column, index, hierarchy, params).has_value());
}

TEST(SuggestWithCut, RequiresPositiveTolerance) {
  Hierarchy hierarchy = Hierarchy::standard();
  CorpusIndex index = make_index({});
  SolverParams params;
  params.tolerance = 0.0;
  std::vector<std::string> column = {"a"};
  EXPECT_THROW(suggest_pattern_with_cut(column, index, hierarchy, params),
               std::invalid_argument);
}

}  // namespace
}  // namespace plix
