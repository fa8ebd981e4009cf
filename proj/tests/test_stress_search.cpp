#include <gtest/gtest.h>

#include "hankel/stress_search.hpp"

using namespace hankel;

TEST(StressSearch, ParseFunctional) {
  EXPECT_EQ(parse_functional("Q2"), Functional::Q2);
  EXPECT_THROW(parse_functional("H5"), std::invalid_argument);
  EXPECT_THROW(maximize_functional(Functional::H3, 0, 1), std::invalid_argument);
}

TEST(StressSearch, EvaluateAtExtremal) {
  const AtomicMeasure cube{{{0.0, 1.0 / 3}, {kTwoPi / 3, 1.0 / 3}, {2 * kTwoPi / 3, 1.0 / 3}}};
  EXPECT_NEAR(evaluate_functional(Functional::H3, cube), 1.0 / 9.0, 1e-14);
  EXPECT_NEAR(evaluate_functional(Functional::H4, cube), 1.0 / 81.0, 1e-14);
  EXPECT_NEAR(evaluate_functional(Functional::a7, cube), 2.0 / 9.0, 1e-14);
}

TEST(StressSearch, DeterministicAndWorkerIndependent) {
  SearchOptions one, many;
  one.workers = 1;
  many.workers = 4;
  const SearchResult a = maximize_functional(Functional::Q1, 5000, 42, one);
  const SearchResult b = maximize_functional(Functional::Q1, 5000, 42, many);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(format_measure(a.measure), format_measure(b.measure));
  EXPECT_EQ(a.iterations, 5000u);
  const SearchResult c = maximize_functional(Functional::Q1, 5000, 43, one);
  EXPECT_NE(format_measure(a.measure), format_measure(c.measure));
}

TEST(StressSearch, H3ReachesOneNinth) {
  const SearchResult r = maximize_functional(Functional::H3, 100000, 0);
  EXPECT_GE(r.best, 1.0 / 9.0 - 1e-3);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_LE(r.slack, 1e-3);
}

TEST(StressSearch, BoundsHoldWithSlack) {
  for (Functional f : {Functional::a6, Functional::H4}) {
    const SearchResult r = maximize_functional(f, 20000, 7);
    EXPECT_EQ(r.violations, 0u) << info(f).name;
    EXPECT_GT(r.slack, 0.0) << info(f).name;
  }
}

TEST(StressSearch, ThreefoldOrbits) {
  SearchOptions o;
  o.threefold_orbits = true;
  o.max_atoms = 2;
  const SearchResult r = maximize_functional(Functional::H3, 20000, 3, o);
  EXPECT_EQ(r.measure.atoms.size() % 3, 0u);
  EXPECT_NEAR(r.best, 1.0 / 9.0, 1e-6);
}

TEST(GapReport, EmptyInput) {
  EXPECT_TRUE(report_gap({}).empty());
  std::vector<ReportItem> items;
  append_gap_items(items, {});
  EXPECT_TRUE(items.empty());
}

TEST(GapReport, CriticalFlag) {
  SearchResult r;
  r.id = Functional::a6;
  r.bound = info(Functional::a6).bound;
  r.best = r.bound + 0.1;
  r.slack = -0.1;
  r.violations = 5;
  r.measure = AtomicMeasure{{{0.0, 1.0}}};
  const auto rows = report_gap({r});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].critical);
  std::vector<ReportItem> items;
  append_gap_items(items, {r});
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0].name, "a6_max");
  EXPECT_EQ(items[0].status, Status::Fail);
  EXPECT_EQ(items[1].computed.rfind("CRITICAL", 0), 0u);
}
