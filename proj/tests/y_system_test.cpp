#include <gtest/gtest.h>

#include "yperiod/errors.hpp"
#include "yperiod/y_system.hpp"

using namespace yperiod;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

// Shape (2,1) has one even site per column: row 1 for even n, row 2 for odd n.
Site lyness_site(int n) { return {n, n % 2 == 0 ? 1 : 2, 1}; }

YState lyness(const Rational& a, const Rational& b, int n_max) {
  return extend(seed_with({2, 1}, [&](const Site& s) { return s.n == 0 ? a : b; }), n_max);
}

}  // namespace

TEST(YState, SetValidation) {
  YState y({2, 2});
  EXPECT_THROW(y.set({0, 1, 2}, q(1)), std::invalid_argument);  // odd site
  EXPECT_THROW(y.set({0, 3, 1}, q(1)), std::invalid_argument);  // outside box
  EXPECT_THROW(y.set({0, 1, 1}, q(0)), DegenerateValue);
  y.set({0, 1, 1}, q(2));
  EXPECT_EQ(y.at({0, 1, 1}), q(2));
  EXPECT_THROW(y.at({2, 1, 1}), MissingNeighbor);
  YState inf({1, 1}, YMode::InfiniteWindow);
  EXPECT_NO_THROW(inf.set({0, -4, 6}, q(3)));
}

TEST(YState, SeedSites) {
  const std::vector<Site> seeds = seed_sites({2, 2});
  const std::vector<Site> expected = {{0, 1, 1}, {0, 2, 2}, {1, 1, 2}, {1, 2, 1}};
  EXPECT_EQ(seeds, expected);
}

TEST(YSystem, RelationRhsByHand) {
  // (2,1): at m = (1,1,1) only the south neighbour (1,2,1) survives.
  YState y = seed_with({2, 1}, [](const Site& s) { return s.n == 0 ? q(3) : q(5); });
  EXPECT_EQ(relation_rhs(y, {1, 1, 1}), q(6));
  EXPECT_THROW(relation_rhs(y, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(relation_rhs(y, {3, 1, 1}), MissingNeighbor);
  // (1,2): at m = (1,1,1) only the plus neighbour (1,1,2) survives: 1/(1+1/y).
  YState z = seed_with({1, 2}, [](const Site&) { return q(2); });
  EXPECT_EQ(relation_rhs(z, {1, 1, 1}), q(2, 3));
}

TEST(YSystem, RelationNeighbors) {
  const std::vector<Site> nb = relation_neighbors({5, 2, 3});
  const std::vector<Site> expected = {{4, 2, 3}, {6, 2, 3}, {5, 1, 3}, {5, 3, 3}, {5, 2, 4}, {5, 2, 2}};
  EXPECT_EQ(nb, expected);
}

TEST(YSystem, LynessFiveCycle) {
  const YState y = lyness(q(1), q(1), 7);
  const std::vector<Rational> expected = {q(1), q(1), q(2), q(3), q(2), q(1), q(1)};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(y.at(lyness_site(n)), expected[n]) << n;
}

TEST(YSystem, LynessClosedForm) {
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    const Rational a = sample_positive(rng, 20);
    const Rational b = sample_positive(rng, 20);
    const YState y = lyness(a, b, 7);
    const std::vector<Rational> expected = {
        a, b, (q(1) + b) / a, (q(1) + a + b) / (a * b), (q(1) + a) / b, a, b};
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(y.at(lyness_site(n)), expected[n]);
  }
}

// Values computed with an independent script.
TEST(YSystem, FrozenOracleShape32) {
  const YState y = extend(seed_with({3, 2}, [](const Site& s) { return q(s.i + 2 * s.j, s.j + 1); }), 16);
  EXPECT_EQ(y.at({2, 2, 2}), q(80, 27));
  EXPECT_EQ(y.at({3, 1, 2}), q(107, 81));
  EXPECT_EQ(y.at({4, 3, 1}), q(1363, 1029));
  EXPECT_EQ(y.at({5, 2, 1}), q(52, 35));
  EXPECT_EQ(y.at({6, 3, 1}), q(27, 25));
  EXPECT_EQ(y.at({6, 1, 1}), q(45, 49));
  EXPECT_EQ(y.at({8, 2, 2}), q(2));
  EXPECT_EQ(y.at({9, 1, 2}), q(21, 25));
  EXPECT_EQ(y.at({9, 2, 1}), q(80, 27));
}

TEST(YSystem, FrozenOracleShape12And33) {
  const YState y = extend(seed_with({1, 2}, [](const Site& s) { return q(2 * s.j + 1, 3); }), 8);
  EXPECT_EQ(y.at({2, 1, 1}), q(5, 8));
  EXPECT_EQ(y.at({3, 1, 2}), q(3, 13));
  EXPECT_EQ(y.at({4, 1, 1}), q(3, 10));
  EXPECT_EQ(y.at({5, 1, 2}), q(1));
  const YState ones = extend(seed_with({3, 3}, [](const Site&) { return q(1); }), 12);
  EXPECT_EQ(ones.at({2, 1, 1}), q(1));
  EXPECT_EQ(ones.at({3, 2, 1}), q(2));
  EXPECT_EQ(ones.at({4, 2, 2}), q(1));
}

TEST(YSystem, ExtendFillsEveryEvenSite) {
  const SystemShape shape{3, 2};
  const YState y = extend(seed_with(shape, [](const Site&) { return q(2); }), 10);
  for (int n = 0; n <= 10; ++n) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 2; ++j) {
        EXPECT_EQ(y.contains({n, i, j}), (n + i + j) % 2 == 0) << n << i << j;
      }
    }
  }
  EXPECT_EQ(y.n_range(), (IntRange{0, 10}));
}

TEST(YSystem, ExtendNeedsSeeds) {
  YState partial({2, 1});
  partial.set({0, 1, 1}, q(1));
  EXPECT_THROW(extend(partial, 4), MissingNeighbor);
}

TEST(YSystem, PeriodicityOnRandomSeeds) {
  Rng rng(11);
  for (const SystemShape shape : {SystemShape{1, 1}, SystemShape{2, 1}, SystemShape{3, 2}, SystemShape{2, 3}}) {
    const SimulatedY sim = simulate_y(shape, rng, 10, default_y_window(shape));
    const Report rel = check_relations(sim.state);
    const Report per = check_periodicity(sim.state);
    const Report tr = check_translation(sim.state);
    EXPECT_GT(rel.total("relations").checked, 0u);
    EXPECT_GT(per.total("periodicity").checked, 0u);
    EXPECT_GT(tr.total("sigma-squared").checked, 0u);
    EXPECT_TRUE(rel.all_passed());
    EXPECT_TRUE(per.all_passed());
    EXPECT_TRUE(tr.all_passed());
  }
}

TEST(YSystem, NegativeSeedsStayPeriodicWhenDefined) {
  Rng rng(3);
  const SimulatedY sim = simulate_y({2, 2}, rng, 6, default_y_window({2, 2}), true);
  EXPECT_TRUE(check_periodicity(sim.state).all_passed());
}

TEST(YSystem, SimulationIsDeterministic) {
  Rng a(99), b(99);
  EXPECT_EQ(simulate_y({3, 3}, a, 10, 12).state, simulate_y({3, 3}, b, 10, 12).state);
}

TEST(YSystem, SingularSeedIsReported) {
  // Y = -1 in a north/south slot makes 1 + Y vanish.
  const YState seeds = seed_with({2, 1}, [](const Site& s) { return s.n == 0 ? q(1) : q(-1); });
  EXPECT_THROW(extend(seeds, 4), DegenerateValue);
}

TEST(YSystem, CorruptionIsDetected) {
  Rng rng(8);
  const SystemShape shape{3, 2};
  const YState good = simulate_y(shape, rng, 10, default_y_window(shape)).state;
  for (const auto& [s, v] : good.values()) {
    YState bad = good;
    bad.overwrite_unchecked(s, v + q(1));
    EXPECT_FALSE(check_relations(bad).all_passed()) << to_string(s);
  }
}

TEST(YSystem, DualPassesTransposedChecks) {
  Rng rng(21);
  const YState y = simulate_y({3, 1}, rng, 10, default_y_window({3, 1})).state;
  const YState w = dual(y);
  EXPECT_EQ(w.shape(), (SystemShape{1, 3}));
  EXPECT_EQ(w.at({0, 1, 1}), y.at({0, 1, 1}).inverse());
  EXPECT_TRUE(check_relations(w).all_passed());
  EXPECT_TRUE(check_periodicity(w).all_passed());
  EXPECT_EQ(dual(w), y);
}

TEST(YSystem, InfiniteWindowConstantSolution) {
  const Diamond window{6, 0, 0, 2};
  const YState ones = extend_infinite_window([](const Site&) { return q(1); }, window);
  EXPECT_EQ(ones.mode(), YMode::InfiniteWindow);
  for (const auto& [s, v] : ones.values()) {
    EXPECT_EQ(v, q(1));
    EXPECT_TRUE(window.contains(s));
  }
  EXPECT_TRUE(check_relations(ones).all_passed());
  EXPECT_GT(check_relations(ones).total("relations").checked, 0u);
  EXPECT_EQ(check_periodicity(ones).total_checked(), 0u);
}

TEST(YSystem, InfiniteWindowGenericSeeds) {
  Rng rng(4);
  const YState y = extend_infinite_window([&](const Site&) { return sample_positive(rng, 10); },
                                          Diamond{5, 1, -2, 1});
  const Report rel = check_relations(y);
  EXPECT_TRUE(rel.all_passed());
  EXPECT_GT(rel.total("relations").checked, 0u);
  // layer n = 5 is the narrowest, radius 1 around (1, -2)
  EXPECT_TRUE(y.contains({5, 1, -2}) || y.contains({5, 0, -2}));
  EXPECT_FALSE(y.contains({5, 4, -2}));
}

TEST(YSystem, UndefinedRightSideCountsAsViolation) {
  Rng rng(10);
  const YState good = simulate_y({2, 2}, rng, 10, default_y_window({2, 2})).state;
  YState bad = good;
  bad.overwrite_unchecked({2, 1, 1}, q(-1));
  Report rep;
  ASSERT_NO_THROW(rep = check_relations(bad));
  EXPECT_FALSE(rep.all_passed());
  bool saw_undefined = false;
  for (const Violation& v : rep.violations()) saw_undefined = saw_undefined || v.expected == "undefined";
  EXPECT_TRUE(saw_undefined);
}
