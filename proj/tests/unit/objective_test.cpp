#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "meanratio/bounds.hpp"
#include "support/finite_diff.hpp"
#include "support/instances.hpp"

namespace meanratio {
namespace {

using testing::central_gradient;
using testing::max_abs;
using testing::uniform;

KnownRatios am(std::size_t n, std::vector<double> r) {
  return {.n = n, .mode = Mode::RelativeToAM, .ratios = std::move(r)};
}
KnownRatios gm(std::size_t n, std::vector<double> r) {
  return {.n = n, .mode = Mode::RelativeToGM, .ratios = std::move(r)};
}

double objective(const KnownRatios& inst, const std::vector<double>& lambdas) {
  const LambdaVector l{lambdas};
  return inst.mode == Mode::RelativeToAM ? objective_f(inst, l)
                                         : objective_g(inst, l);
}

LambdaVector optimal(const KnownRatios& inst) {
  return inst.mode == Mode::RelativeToAM ? optimal_lambdas_am(inst)
                                         : optimal_lambdas_gm(inst);
}

TEST(ObjectiveF, UnitLambdas) {
  EXPECT_DOUBLE_EQ(objective_f(am(10, {1, 1}), {{1, 1}}), 1.0);
  // Σλ^(n-m) r / n + (n - Σr)/n collapses to 1 for any feasible r.
  EXPECT_DOUBLE_EQ(objective_f(am(10, {5, 1}), {{1, 1}}), 1.0);
}

TEST(ObjectiveF, OptimumMatchesClosedForm) {
  const auto inst = am(10, {5, 1});
  const double at_opt = objective_f(inst, optimal_lambdas_am(inst));
  EXPECT_NEAR(at_opt, 0.67464142383678165756, 1e-15);
  EXPECT_NEAR(at_opt, xia_bound_am(inst).value, 1e-15);
}

TEST(ObjectiveG, UnitLambdas) {
  EXPECT_DOUBLE_EQ(objective_g(gm(10, {1, 1}), {{1, 1}}), 1.0);
  EXPECT_DOUBLE_EQ(objective_g(gm(10, {5, 1}), {{1, 1}}), 1.0);
}

TEST(ObjectiveG, OptimumMatchesClosedForm) {
  const auto inst = gm(10, {5, 1});
  const double at_opt = objective_g(inst, optimal_lambdas_gm(inst));
  EXPECT_NEAR(at_opt, 0.79731315216223410769, 1e-15);
  EXPECT_NEAR(at_opt, xia_bound_gm(inst).value, 1e-15);
}

TEST(Objectives, Errors) {
  EXPECT_THROW(objective_f(am(10, {5, 1}), {{1, 0}}), DomainError);
  EXPECT_THROW(objective_f(am(10, {5, 1}), {{1, -1}}), DomainError);
  EXPECT_THROW(objective_f(am(10, {5, 1}), {{1}}), UsageError);
  EXPECT_THROW(objective_f(gm(10, {5, 1}), {{1, 1}}), UsageError);
  EXPECT_THROW(objective_f(am(3, {1, 1, 1}), {{1, 1, 1}}), DegenerateError);
  EXPECT_THROW(objective_g(gm(10, {5, 1}), {{0, 1}}), DomainError);
  EXPECT_THROW(objective_g(gm(4, {2, 0.5, 1, 1}), {{1, 1, 1, 1}}),
               DegenerateError);
}

TEST(ObjectiveG, RejectsLambdaOutsideValidRegion) {
  const auto inst = gm(10, {5, 1});
  // λ_1^8 · 5 = 1280 makes 1 - Σ r λ^(n-m) / n strongly negative.
  const LambdaVector big{{2, 1}};
  EXPECT_LT(objective_g_denominator(inst, big), 0.0);
  EXPECT_THROW(objective_g(inst, big), LambdaRegionError);
  try {
    objective_g(inst, big);
  } catch (const LambdaRegionError& e) {
    EXPECT_STREQ(e.what(), "λ outside the valid bound region");
  }
}

TEST(OptimalLambdasAm, Examples) {
  EXPECT_EQ(optimal_lambdas_am(am(10, {1, 1})).values,
            (std::vector<double>{1, 1}));

  const auto l = optimal_lambdas_am(am(10, {5, 1})).values;
  ASSERT_EQ(l.size(), 2u);
  // (0.5 · 5^(1/8))^(1/10) · r_i^(-1/8), frozen at 20 digits.
  EXPECT_NEAR(l[0], 0.77850763284320067980, 1e-15);
  EXPECT_NEAR(l[1], 0.95199381205838440365, 1e-15);
  EXPECT_NEAR(l[0], std::pow(0.5 * std::pow(5.0, 0.125), 0.1) *
                        std::pow(5.0, -0.125),
              1e-15);
  EXPECT_THROW(optimal_lambdas_am(am(3, {1, 1, 1})), DegenerateError);
}

TEST(OptimalLambdasGm, Examples) {
  EXPECT_EQ(optimal_lambdas_gm(gm(10, {1, 1})).values,
            (std::vector<double>{1, 1}));
  const auto l = optimal_lambdas_gm(gm(10, {5, 1})).values;
  EXPECT_NEAR(l[0], 0.81776543395794250457, 1e-15);
  EXPECT_EQ(l[1], 1.0);
  const auto five = optimal_lambdas_gm(gm(5, {4})).values;
  EXPECT_NEAR(five[0], 1.0 / std::sqrt(2.0), 2e-16);
  EXPECT_THROW(optimal_lambdas_gm(gm(4, {2, 0.5, 1, 1})), DegenerateError);
}

TEST(Stationarity, GradientVanishesAtOptimumForExample) {
  for (const auto& inst : {am(10, {5, 1}), gm(10, {5, 1})}) {
    const auto lambdas = optimal(inst).values;
    const auto grad = central_gradient(
        [&](const std::vector<double>& l) { return objective(inst, l); },
        lambdas);
    EXPECT_LT(max_abs(grad), 1e-6);
  }
}

TEST(StationarityProperty, RandomInstances) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const KnownRatios inst = testing::random_instance(rng);
    const auto lambdas = optimal(inst).values;
    const auto grad = central_gradient(
        [&](const std::vector<double>& l) { return objective(inst, l); },
        lambdas);
    EXPECT_LT(max_abs(grad), 1e-6) << "trial " << trial;
  }
}

TEST(LocalMinimalityProperty, PerturbationsNeverImprove) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const KnownRatios inst = testing::random_instance(rng);
    const auto best = optimal(inst).values;
    const double at_best = objective(inst, best);
    for (int k = 0; k < 100; ++k) {
      auto probe = best;
      for (double& l : probe) l *= 1.0 + 1e-2 * uniform(rng, -1, 1);
      if (inst.mode == Mode::RelativeToGM &&
          objective_g_denominator(inst, {probe}) <= 0.0) {
        continue;
      }
      EXPECT_GE(objective(inst, probe), at_best - 1e-15);
    }
  }
}

TEST(LambdaFamilyProperty, EveryValidLambdaBoundsFromAbove) {
  std::mt19937_64 rng(23);
  std::size_t evaluated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const KnownRatios inst = testing::random_instance(rng);
    const double bound = xia_bound(inst).value;
    const auto centre = optimal(inst).values;
    for (int k = 0; k < 1000; ++k) {
      const double spread = k % 3 == 0 ? 0.01 : (k % 3 == 1 ? 0.3 : 2.0);
      auto lambdas = centre;
      for (double& l : lambdas) l *= std::exp(uniform(rng, -spread, spread));
      if (inst.mode == Mode::RelativeToGM &&
          objective_g_denominator(inst, {lambdas}) <= 0.0) {
        EXPECT_THROW(objective_g(inst, {lambdas}), LambdaRegionError);
        continue;
      }
      ++evaluated;
      EXPECT_GE(objective(inst, lambdas), bound - 1e-12);
    }
  }
  EXPECT_GT(evaluated, 20'000u);
}

TEST(LambdaRegionProperty, OptimalLambdaIsInside) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    KnownRatios inst = testing::random_instance(rng);
    inst.mode = Mode::RelativeToGM;
    EXPECT_GT(objective_g_denominator(inst, optimal_lambdas_gm(inst)), 0.0);
  }
}

}  // namespace
}  // namespace meanratio
