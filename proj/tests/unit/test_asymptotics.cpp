#include <gtest/gtest.h>

#include <cmath>

#include "hecke/asymptotics.hpp"
#include "hecke/insertion.hpp"

namespace hecke {

TEST(Curve, EndpointsAndMonotone) {
  EXPECT_DOUBLE_EQ(plancherel_curve(0.0), 1.0);
  EXPECT_DOUBLE_EQ(plancherel_curve(1.0), 0.0);
  EXPECT_DOUBLE_EQ(plancherel_curve(2.0), 0.0);
  double prev = 1.0;
  for (int i = 1; i <= 100; ++i) {
    const double y = plancherel_curve(i / 100.0);
    EXPECT_LE(y, prev + 1e-12);
    prev = y;
  }
}

TEST(Curve, SymmetricUnderReflection) {
  // The curve is its own inverse: y = f(x) iff x = f(y).
  for (int i = 1; i < 50; ++i) {
    const double x = i / 50.0;
    EXPECT_NEAR(plancherel_curve(plancherel_curve(x)), x, 1e-9);
  }
}

TEST(Curve, SatisfiesParametricForm) {
  for (double theta : {0.3, 1.0, 1.5, 2.2, 3.0}) {
    const double y = (std::sin(theta) - theta * std::cos(theta)) / M_PI;
    const double x = y + std::cos(theta);
    if (x < 0 || x > 1) continue;
    EXPECT_NEAR(plancherel_curve(x), y, 1e-10);
  }
}

TEST(ShapeFunctionTest, StepAndLinear) {
  const ShapeFunction f(YoungDiagram({3, 1}), 1.0);
  EXPECT_DOUBLE_EQ(f.step(0.5), 2.0);
  EXPECT_DOUBLE_EQ(f.step(1.5), 1.0);
  EXPECT_DOUBLE_EQ(f.step(3.0), 0.0);
  EXPECT_DOUBLE_EQ(f.linear(0.0), 2.0);
  EXPECT_DOUBLE_EQ(f.linear(0.5), 1.5);
  EXPECT_DOUBLE_EQ(f.linear(2.0), 1.0);
  EXPECT_DOUBLE_EQ(f.linear(4.0), 0.0);
  EXPECT_DOUBLE_EQ(f.support_end(), 3.0);
  EXPECT_EQ(f.breakpoints().size(), 4u);
}

TEST(ShapeFunctionTest, StaircaseCloseToLine) {
  for (int q : {4, 8, 16, 63}) {
    const auto f = rescale(YoungDiagram::staircase(q), 1000, q, Regime::staircase);
    EXPECT_LE(sup_norm_distance(f, staircase_line), 1.0 / q + 1e-12) << q;
  }
}

TEST(ShapeFunctionTest, SqrtRegimeScale) {
  const auto f = rescale(YoungDiagram({4, 2}), 4, 9, Regime::sqrt_n);
  EXPECT_DOUBLE_EQ(f.support_end(), 1.0);
  EXPECT_DOUBLE_EQ(f.linear(0.0), 0.5);
}

TEST(Regimes, Selection) {
  EXPECT_EQ(regime_for_alpha(0.25), Regime::staircase);
  EXPECT_EQ(regime_for_alpha(0.5), Regime::sqrt_n);
  EXPECT_EQ(regime_for_alpha(1.0), Regime::sqrt_n);
  EXPECT_STREQ(regime_name(Regime::staircase), "staircase");
}

TEST(Beta, Values) {
  EXPECT_DOUBLE_EQ(beta(0.5), 0.25);
  EXPECT_DOUBLE_EQ(beta(1.0), 0.5);
  EXPECT_DOUBLE_EQ(beta(2.0), 0.75);
  EXPECT_NEAR(beta(1e9), 1.0, 1e-8);
  EXPECT_THROW(beta(0.0), std::invalid_argument);
}

TEST(Sweep, ParameterToAlphabet) {
  SweepConfig c;
  c.n = 10000;
  c.mode = SweepConfig::Mode::alpha;
  c.parameter = 0.45;
  EXPECT_EQ(c.q(), 63);
  c.parameter = 1.0;
  EXPECT_EQ(c.q(), 10000);
  c.mode = SweepConfig::Mode::k;
  c.parameter = 0.5;
  EXPECT_EQ(c.q(), 50);
  c.parameter = 0.001;
  EXPECT_THROW(c.q(), std::invalid_argument);
}

TEST(Sweep, SingleLetter) {
  SweepConfig c;
  c.n = 50;
  c.mode = SweepConfig::Mode::alpha;
  c.parameter = 0.0;
  c.trials = 20;
  c.seed = 1;
  const auto r = sweep(c);
  EXPECT_EQ(r.q, 1);
  EXPECT_EQ(r.sum_lis, 20u);
  EXPECT_DOUBLE_EQ(r.mean_lis, 1.0);
  EXPECT_DOUBLE_EQ(r.sigma_lis, 0.0);
  EXPECT_DOUBLE_EQ(r.staircase_fraction, 1.0);
}

TEST(Sweep, AggregatesMatchRecords) {
  SweepConfig c;
  c.n = 200;
  c.mode = SweepConfig::Mode::k;
  c.parameter = 1.0;
  c.trials = 30;
  c.seed = 5;
  c.max_snapshots = 30;
  c.threads = 3;
  const auto r = sweep(c);
  ASSERT_EQ(r.snapshots.size(), 30u);
  std::uint64_t s = 0, s2 = 0;
  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    EXPECT_EQ(r.snapshots[i].first, i);
    const auto l = static_cast<std::uint64_t>(r.snapshots[i].second.first_row());
    s += l;
    s2 += l * l;
  }
  EXPECT_EQ(r.sum_lis, s);
  EXPECT_EQ(r.sum_lis_sq, s2);
  const double mean = static_cast<double>(s) / 30.0;
  EXPECT_NEAR(r.mean_lis, mean, 1e-12);
  const double var = (static_cast<double>(s2) - 30.0 * mean * mean) / 29.0;
  EXPECT_NEAR(r.sigma_lis, std::sqrt(var), 1e-9);
  c.threads = 1;
  const auto r1 = sweep(c);
  EXPECT_EQ(r1.sum_lis, r.sum_lis);
  EXPECT_EQ(r1.sum_lds_sq, r.sum_lds_sq);
}

TEST(Sweep, GridUsesSameSeedPerRow) {
  const auto g = sweep_grid(100, SweepConfig::Mode::k, {1.0, 1.0}, 10, 3, 1);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].sum_lis, g[1].sum_lis);
}

TEST(Staircase, Detection) {
  EXPECT_TRUE(is_staircase(YoungDiagram({3, 2, 1}), 3));
  EXPECT_FALSE(is_staircase(YoungDiagram({3, 2}), 3));
  EXPECT_FALSE(is_staircase(YoungDiagram({3, 2, 1}), 4));
}

TEST(Staircase, ShapeTestAgreesWithPermutationTest) {
  const auto c = staircase_check(200, 4, 300, 9, 2);
  EXPECT_EQ(c.trials, 300u);
  EXPECT_EQ(c.disagreements, 0u);
  EXPECT_EQ(c.shape_hits, c.permutation_hits);
  EXPECT_GT(c.fraction(), 0.9);
}

TEST(ErdosSzekeres, Bound) {
  EXPECT_EQ(erdos_szekeres_bound(3, 3, 4), 8);
  EXPECT_EQ(erdos_szekeres_bound(1, 1, 2), 1);
  for (int q = 2; q <= 9; ++q) {
    for (int a = 1; a < q; ++a) {
      for (int b = 1; b < q; ++b) {
        EXPECT_EQ(erdos_szekeres_bound(a, b, q), erdos_szekeres_bound_by_columns(a, b, q));
        EXPECT_EQ(erdos_szekeres_bound(a, b, q), erdos_szekeres_bound(b, a, q));
      }
    }
  }
  EXPECT_THROW(erdos_szekeres_bound(4, 1, 4), std::invalid_argument);
}

TEST(ErdosSzekeres, TightnessWitness) {
  const Word w = Word::parse("2 1 3 4 2 3 1 2", 4);
  EXPECT_EQ(coxeter_length(hecke_product(w)), 8);
  EXPECT_EQ(lis(w), 3);
  EXPECT_EQ(lds(w), 3);
  EXPECT_EQ(coxeter_length(hecke_product(w)), erdos_szekeres_bound(3, 3, 4));
  EXPECT_TRUE(check_es(w, 3, 3));
  EXPECT_TRUE(check_es(w, 2, 3));
}

TEST(ErdosSzekeres, ImplicationExhaustive) {
  for (int q = 2; q <= 4; ++q) {
    for (int n = 0; n <= 7; ++n) {
      for_each_word(static_cast<std::size_t>(n), q, [&](const Word& w) {
        for (int a = 1; a < q; ++a)
          for (int b = 1; b < q; ++b) ASSERT_TRUE(check_es(w, a, b)) << w.to_string();
      });
    }
  }
}

TEST(ErdosSzekeres, LengthBoundedByShapeInBox) {
  // The contrapositive: LIS = a and LDS = b bound the Coxeter length.
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Word w = random_word(12, 5, s);
    const int a = lis(w), b = lds(w);
    if (a >= 5 || b >= 5) continue;
    EXPECT_LE(coxeter_length(hecke_product(w)), erdos_szekeres_bound(a, b, 5)) << w.to_string();
  }
}

}  // namespace hecke
