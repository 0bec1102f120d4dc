#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "ordent/process.hpp"

using namespace ordent;

namespace {

std::vector<double> samples(const ProcessKind& kind, std::size_t T, std::uint64_t seed,
                            std::optional<std::size_t> transient = std::nullopt) {
  const auto ts = generate(ProcessSpec{kind, T, seed, transient});
  return {ts.samples().begin(), ts.samples().end()};
}

const std::vector<ProcessKind>& all_kinds() {
  static const std::vector<ProcessKind> kinds{WhiteNoise{}, FractionalGaussianNoise{0.75}, FractionalBrownianMotion{0.2},
                                              FractionalBrownianMotion{0.7}, Logistic{}, NoisyLogistic{},
                                              NoisyCubic{}, NoisySkewTent{}};
  return kinds;
}

}  // namespace

TEST(Generate, LogisticHandIteration) {
  const auto x = samples(Logistic{4.0, 0.3}, 4, 0, 0);
  EXPECT_DOUBLE_EQ(x[0], 0.3);
  EXPECT_DOUBLE_EQ(x[1], 0.84);
  EXPECT_DOUBLE_EQ(x[2], 0.5376);
  EXPECT_DOUBLE_EQ(x[3], 0.99434496);
}

TEST(Generate, DefaultTransientForMaps) {
  EXPECT_EQ(effective_transient(ProcessSpec{Logistic{}, 10, 0, std::nullopt}), kDefaultMapTransient);
  EXPECT_EQ(effective_transient(ProcessSpec{WhiteNoise{}, 10, 0, std::nullopt}), 0u);
  EXPECT_EQ(effective_transient(ProcessSpec{Logistic{}, 10, 0, 5}), 5u);
  // the transient just shifts the orbit
  const auto full = samples(Logistic{4.0, 0.3}, 20, 0, 0);
  const auto cut = samples(Logistic{4.0, 0.3}, 10, 0, 10);
  EXPECT_TRUE(std::equal(cut.begin(), cut.end(), full.begin() + 10));
}

TEST(Generate, ReproducibleAndSeedSensitive) {
  for (const auto& k : all_kinds()) {
    const auto a = samples(k, 3000, 42), b = samples(k, 3000, 42), c = samples(k, 3000, 43);
    EXPECT_EQ(a, b) << describe(k);
    if (!std::holds_alternative<Logistic>(k)) {
      EXPECT_NE(a, c) << describe(k);
    }
    EXPECT_EQ(a.size(), 3000u);
  }
}

TEST(Generate, Ranges) {
  for (double v : samples(WhiteNoise{}, 100000, 1)) ASSERT_TRUE(v >= 0.0 && v < 1.0);
  for (double v : samples(Logistic{}, 100000, 1)) ASSERT_TRUE(v >= 0.0 && v <= 1.0);
  for (double v : samples(NoisyLogistic{}, 100000, 1)) ASSERT_TRUE(v >= 0.0 && v <= 1.0);
  for (double v : samples(NoisySkewTent{0.0, 0.3}, 100000, 1)) ASSERT_TRUE(v >= 0.0 && v <= 1.0);
  for (double v : samples(NoisySkewTent{}, 100000, 1)) ASSERT_TRUE(v >= -0.1 && v <= 1.1);
  const double b = 2.0 / std::sqrt(3.0);
  for (double v : samples(NoisyCubic{0.0, 0.1}, 100000, 1)) ASSERT_TRUE(v >= -b && v <= b);
  for (double v : samples(NoisyCubic{}, 100000, 1)) ASSERT_TRUE(v >= -b - 0.075 && v <= b + 0.075);
}

TEST(Generate, MapsDoNotCollapse) {
  // a clean orbit stuck on a fixed point would have one distinct value at the end
  for (const ProcessKind& k : {ProcessKind{NoisySkewTent{0.0, 0.3}}, ProcessKind{NoisyCubic{0.0, 0.1}}, ProcessKind{Logistic{}}}) {
    auto x = samples(k, 200000, 1);
    std::vector<double> tail(x.end() - 1000, x.end());
    std::sort(tail.begin(), tail.end());
    EXPECT_GT(std::unique(tail.begin(), tail.end()) - tail.begin(), 900) << describe(k);
  }
}

TEST(Generate, Validation) {
  EXPECT_THROW(validate(ProcessSpec{WhiteNoise{}, 1, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(ProcessSpec{FractionalGaussianNoise{0.0}, 10, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(ProcessSpec{FractionalBrownianMotion{1.0}, 10, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(ProcessSpec{Logistic{4.5, 0.3}, 10, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(ProcessSpec{NoisyLogistic{3.8, -1.0, 0.5, std::nullopt}, 10, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(ProcessSpec{NoisyLogistic{3.8, 0.001, 0.5, 3.7}, 10, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(ProcessSpec{NoisyCubic{-0.1, 0.1}, 10, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(ProcessSpec{NoisySkewTent{0.2, 1.5}, 10, 0, std::nullopt}), std::invalid_argument);
  EXPECT_EQ(describe(FractionalBrownianMotion{0.2}), "fbm(H=0.2)");
}

TEST(RandomStream, UniformAndGaussianMoments) {
  RandomStream rng(7);
  const int n = 400000;
  long double s = 0, s2 = 0, g = 0, g2 = 0, g4 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_TRUE(u >= 0.0 && u < 1.0);
    s += u;
    s2 += u * u;
    const double z = rng.gaussian();
    g += z;
    g2 += z * z;
    g4 += z * z * z * z;
  }
  EXPECT_NEAR(static_cast<double>(s / n), 0.5, 5 * std::sqrt(1.0 / 12 / n));
  EXPECT_NEAR(static_cast<double>(s2 / n), 1.0 / 3, 0.002);
  EXPECT_NEAR(static_cast<double>(g / n), 0.0, 5 / std::sqrt(n));
  EXPECT_NEAR(static_cast<double>(g2 / n), 1.0, 5 * std::sqrt(2.0 / n));
  EXPECT_NEAR(static_cast<double>(g4 / n), 3.0, 5 * std::sqrt(96.0 / n));
}

TEST(Fgn, AutocovarianceFormula) {
  for (std::size_t k = 1; k < 10; ++k) EXPECT_NEAR(fgn_autocovariance(0.5, k), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(fgn_autocovariance(0.75, 0), 1.0);
  for (std::size_t k = 0; k < 10; ++k) EXPECT_NEAR(fgn_autocovariance(0.3, k), oracle::fgn_gamma(0.3, k), 1e-15);
}

TEST(Fgn, CirculantEmbeddingIsNonNegative) {
  for (double H : {0.05, 0.2, 0.5, 0.75, 0.95}) EXPECT_GE(circulant_min_eigenvalue_ratio(5000, H), -1e-12) << H;
}

TEST(Fgn, BothMethodsMatchCovariance) {
  const std::size_t T = 1 << 15;
  for (double H : {0.2, 0.75}) {
    std::vector<double> table(T);
    for (std::size_t j = 0; j < T; ++j) table[j] = fgn_autocovariance(H, j);
    const auto gamma = [&](std::size_t j) { return table[j]; };
    for (auto method : {FgnMethod::kCirculant, FgnMethod::kDurbinLevinson}) {
      RandomStream rng(100 + static_cast<int>(method));
      const auto x = generate_fgn(T, H, rng, method);
      for (std::size_t k : {0u, 1u, 2u, 5u, 10u}) {
        const double se = oracle::autocov_standard_error(gamma, T, k);
        EXPECT_NEAR(oracle::autocov_zero_mean(x, k), table[k], 4 * se) << "H=" << H << " k=" << k;
      }
    }
  }
}

TEST(Fbm, IncrementVarianceScaling) {
  for (double H : {0.2, 0.5, 0.7}) {
    const auto x = samples(FractionalBrownianMotion{H}, 1 << 17, 11);
    EXPECT_EQ(x[0], 0.0);
    for (std::size_t s : {1u, 2u, 4u, 8u, 16u}) {
      long double v = 0;
      const std::size_t n = x.size() - s;
      for (std::size_t t = 0; t < n; ++t) v += (x[t + s] - x[t]) * (x[t + s] - x[t]);
      const double var = static_cast<double>(v / n);
      EXPECT_NEAR(var / std::pow(static_cast<double>(s), 2 * H), 1.0, 0.1) << "H=" << H << " s=" << s;
    }
  }
}

TEST(Stationarity, OrderProbabilitiesAgreeAcrossThirds) {
  // P(x_t < x_{t+k}) per third of a series. Differences between thirds are
  // paired within a realization and averaged over independent realizations;
  // batch means inside one series understate the error for persistent fBm.
  const std::size_t T = 3000, third = T / 3;
  const int R = 300;
  for (const auto& base : all_kinds()) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<std::array<double, 3>> diffs;  // (0,1), (0,2), (1,2)
      for (int r = 0; r < R; ++r) {
        ProcessKind kind = base;
        // maps need a spread of initial conditions to form an ensemble
        const double u = 0.05 + 0.9 * (r + 0.5) / R;
        if (auto* m = std::get_if<Logistic>(&kind)) m->x0 = u;
        if (auto* m = std::get_if<NoisyLogistic>(&kind)) m->x0 = u;
        if (auto* m = std::get_if<NoisyCubic>(&kind)) m->y0 = 2 * u - 1;
        if (auto* m = std::get_if<NoisySkewTent>(&kind)) m->y0 = u;
        const auto x = samples(kind, T, 1000 + static_cast<std::uint64_t>(r));
        double p[3];
        for (int part = 0; part < 3; ++part) {
          int hits = 0;
          const std::size_t begin = part * third, end = begin + third - k;
          for (std::size_t t = begin; t < end; ++t) hits += x[t] < x[t + k];
          p[part] = static_cast<double>(hits) / static_cast<double>(end - begin);
        }
        diffs.push_back({p[0] - p[1], p[0] - p[2], p[1] - p[2]});
      }
      for (int c = 0; c < 3; ++c) {
        double m = 0, v = 0;
        for (const auto& d : diffs) m += d[c];
        m /= R;
        for (const auto& d : diffs) v += (d[c] - m) * (d[c] - m);
        const double se = std::sqrt(v / (R - 1) / R);
        EXPECT_LE(std::abs(m), 4 * se + 1e-12) << describe(base) << " k=" << k << " pair " << c;
      }
    }
  }
}
