#include <gtest/gtest.h>

#include "yperiod/report.hpp"

using namespace yperiod;

TEST(Report, CountersAddUp) {
  Report r;
  r.record("relations", {2, 1}, true);
  r.record("relations", {2, 1}, false, "(1,1,1)", "2", "3");
  r.record("relations", {3, 2}, true);
  r.tally("z-class:j=1", {2, 1}, false);
  const Counter total = r.total("relations");
  EXPECT_EQ(total.checked, 3u);
  EXPECT_EQ(total.passed, 2u);
  EXPECT_EQ(total.failed, 1u);
  EXPECT_EQ(r.violations().size(), 1u);
  EXPECT_EQ(r.violations()[0].where, "(1,1,1)");
  EXPECT_EQ(r.total_failed(), 2u);
  EXPECT_FALSE(r.all_passed());
  for (const auto& [key, c] : r.counters()) EXPECT_EQ(c.checked, c.passed + c.failed);
}

TEST(Report, ViolationLogIsCapped) {
  Report r;
  for (std::size_t t = 0; t < Report::kMaxViolations + 50; ++t) r.record("x", {1, 1}, false);
  EXPECT_EQ(r.violations().size(), Report::kMaxViolations);
  EXPECT_EQ(r.total("x").failed, Report::kMaxViolations + 50);
}

TEST(Report, MergeIsAssociative) {
  Report a, b, c;
  a.record("p", {1, 1}, true);
  b.record("p", {1, 1}, false, "w");
  b.add_trial({"1,1", 5, 0, false, false, 1.0});
  c.record("q", {2, 2}, true);
  c.add_note("n");
  Report left = a;
  left.merge(b).merge(c);
  Report bc = b;
  bc.merge(c);
  Report right = a;
  right.merge(bc);
  EXPECT_EQ(left, right);
  EXPECT_EQ(left.trials().size(), 1u);
  EXPECT_EQ(left.notes().size(), 1u);
}

TEST(Report, WallTimeIgnoredInEquality) {
  Report a, b;
  a.add_trial({"1,1", 5, 2, false, false, 1.0});
  b.add_trial({"1,1", 5, 2, false, false, 99.0});
  EXPECT_EQ(a, b);
  Report c;
  c.add_trial({"1,1", 5, 2, false, true, 1.0});
  EXPECT_TRUE(c.any_exhausted());
  EXPECT_FALSE(a.any_exhausted());
}

TEST(Report, EmptyReportPasses) {
  Report r;
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.total_checked(), 0u);
}
