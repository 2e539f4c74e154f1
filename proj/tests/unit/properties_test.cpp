#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "meanratio/bounds.hpp"
#include "meanratio/oracle.hpp"
#include "support/instances.hpp"
#include "support/reference.hpp"

namespace meanratio {
namespace {

using testing::uniform;

TEST(SoundnessProperty, RandomCompletionsNeverExceedBound) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const KnownRatios inst = testing::random_instance(rng);
    const double bound = xia_bound(inst).value;
    for (int k = 0; k < 200; ++k) {
      const Completion c = oracle::random_completion(inst, rng);
      EXPECT_LE(c.ratio(), bound + 1e-12);
    }
  }
}

TEST(SharpnessProperty, ExtremalCompletionAttainsBound) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const KnownRatios inst = testing::random_instance(rng);
    const double bound = xia_bound(inst).value;
    EXPECT_NEAR(extremal_completion(inst).ratio(), bound, 1e-12 * bound);
  }
}

TEST(ClosedFormProperty, AgreesWithWideReference) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const KnownRatios inst =
        testing::random_instance(rng, {.n_max = 40, .allow_full = true});
    const double want = inst.mode == Mode::RelativeToAM
                            ? testing::ref_xia_am(inst.n, inst.ratios)
                            : testing::ref_xia_gm(inst.n, inst.ratios);
    EXPECT_NEAR(xia_bound(inst).value, want, 1e-13 * want);
  }
}

TEST(ChainProperty, BoundsAtMostOneAndOneOnlyForUnitRatios) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 2000; ++trial) {
    KnownRatios inst =
        testing::random_instance(rng, {.n_max = 30, .allow_full = true});
    const double v = xia_bound(inst).value;
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_LT(v, 1.0 - 1e-12);

    std::fill(inst.ratios.begin(), inst.ratios.end(), 1.0);
    EXPECT_EQ(xia_bound(inst).value, 1.0);
  }
}

TEST(ChainProperty, MovingAnyRatioOffOneStrictlyDecreases) {
  for (Mode mode : {Mode::RelativeToAM, Mode::RelativeToGM}) {
    for (std::size_t n : {2u, 5u, 12u}) {
      for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t k = 0; k < m; ++k) {
          for (double delta : {-1e-3, 1e-3}) {
            KnownRatios inst{.n = n, .mode = mode,
                             .ratios = std::vector<double>(m, 1.0)};
            inst.ratios[k] += delta;
            EXPECT_LT(xia_bound(inst).value, 1.0 - 1e-9)
                << to_string(mode) << " n=" << n << " m=" << m;
          }
        }
      }
    }
  }
}

TEST(PermutationProperty, BoundsIgnoreRatioOrder) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 300; ++trial) {
    KnownRatios inst = testing::random_instance(rng);
    const double before = xia_bound(inst).value;
    std::shuffle(inst.ratios.begin(), inst.ratios.end(), rng);
    EXPECT_NEAR(xia_bound(inst).value, before, 1e-15 * before);
  }
}

TEST(SingleRatioProperty, AmClosedFormPeaksAtOne) {
  for (std::size_t n : {2u, 3u, 10u, 50u}) {
    const auto nd = static_cast<double>(n);
    double best_r = 0.0;
    double best_v = 0.0;
    for (int i = 1; i < 2000; ++i) {
      const double r = nd * i / 2000.0;
      const double v =
          xia_bound_am({.n = n, .mode = Mode::RelativeToAM, .ratios = {r}})
              .value;
      const double hand = std::pow((nd - r) / (nd - 1), (nd - 1) / nd) *
                          std::pow(r, 1 / nd);
      EXPECT_NEAR(v, hand, 1e-14);
      if (v > best_v) {
        best_v = v;
        best_r = r;
      }
    }
    EXPECT_EQ(xia_bound_am({.n = n, .mode = Mode::RelativeToAM, .ratios = {1.0}})
                  .value,
              1.0);
    EXPECT_NEAR(best_r, 1.0, nd / 2000.0);
  }
}

TEST(DominanceProperty, SharpBoundNeverAboveTung) {
  for (std::size_t n = 3; n <= 30; ++n) {
    const auto nd = static_cast<double>(n);
    for (int i = 1; i <= 60; ++i) {
      const double r2 = i / 60.0;
      for (int j = 0; j < 60; ++j) {
        // r1 sweeps [1, n - r2) in AM mode, [1, 3n] in GM mode.
        const double r1_am = 1.0 + (nd - r2 - 1.0) * j / 60.0;
        const double xia_am =
            xia_bound_am({.n = n, .mode = Mode::RelativeToAM,
                          .ratios = {r1_am, r2}})
                .value;
        EXPECT_LE(xia_am, tung_bound_am(n, r1_am, r2).value + 1e-12);

        const double r1_gm = 1.0 + 3.0 * nd * j / 60.0;
        const double xia_gm =
            xia_bound_gm({.n = n, .mode = Mode::RelativeToGM,
                          .ratios = {r1_gm, r2}})
                .value;
        EXPECT_LE(xia_gm, tung_bound_gm(n, r1_gm, r2).value + 1e-12);
      }
    }
  }
}

TEST(TungGapProperty, HoldsForRandomSamples) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 20'000; ++trial) {
    std::vector<double> v(testing::uniform_int(rng, 1, 50));
    for (double& x : v) x = std::exp(uniform(rng, -3, 3));
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    double sum = 0.0;
    double log_sum = 0.0;
    for (double x : v) {
      sum += x;
      log_sum += std::log(x);
    }
    const double n = static_cast<double>(v.size());
    const double gap = sum / n - std::exp(log_sum / n);
    EXPECT_GE(gap, tung_gap(v.size(), *hi, *lo).value - 1e-12);
  }
}

}  // namespace
}  // namespace meanratio
