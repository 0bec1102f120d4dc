#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ordent/census.hpp"
#include "ordent/complexity.hpp"

using namespace ordent;

TEST(ComplexityClass, GAndInverse) {
  const auto fac = ComplexityClass::factorial();
  EXPECT_EQ(fac.g(1.0), 0.0);
  EXPECT_NEAR(fac.inverse_at_zero(), 1.0, 1e-15);
  EXPECT_NEAR(ComplexityClass::exponential(2.0).g_inverse(3.0), 1.5, 1e-15);
  EXPECT_NEAR(fac.g_inverse(std::log(5040.0)), oracle::t_log_t_inverse(std::log(5040.0)), 1e-12);
  EXPECT_THROW(fac.g(0.5), std::domain_error);
  EXPECT_THROW(fac.g_inverse(-0.1), std::domain_error);
  EXPECT_THROW(ComplexityClass::exponential(1.0).g_inverse(-1.0), std::domain_error);
  EXPECT_THROW(ComplexityClass::exponential(0.0), std::invalid_argument);
  EXPECT_THROW(ComplexityClass::sub_factorial(1.0), std::invalid_argument);
}

TEST(ComplexityClass, InverseRoundTripAndMonotone) {
  for (const auto& cls : {ComplexityClass::exponential(0.7), ComplexityClass::factorial(),
                          ComplexityClass::sub_factorial(0.4)}) {
    double prev = -1.0;
    for (double t = cls.domain_min(); t < cls.domain_min() + 200.0; t += 0.37) {
      const double s = cls.g(t);
      ASSERT_GT(s, prev) << cls.name();
      ASSERT_NEAR(cls.g_inverse(s), t, 1e-10 * std::max(1.0, t)) << cls.name();
      prev = s;
    }
  }
}

TEST(MetricEntropy, ClosedFormsAgreeWithRootFinding) {
  for (double R = 0.0; R <= 20.0; R += 0.02) {
    const double expect = oracle::t_log_t_inverse(R) - 1.0;
    ASSERT_NEAR(ComplexityClass::factorial().z_from_renyi(R), expect, 1e-10 * std::max(1.0, expect)) << R;
    const double sub = oracle::t_log_t_inverse(R / 0.5) - 1.0;
    ASSERT_NEAR(ComplexityClass::sub_factorial(0.5).z_from_renyi(R), sub, 1e-10 * std::max(1.0, sub)) << R;
  }
}

TEST(MetricEntropy, Examples) {
  const Distribution degenerate({1.0, 0.0, 0.0});
  EXPECT_EQ(metric_perm_entropy(degenerate, ComplexityClass::factorial(), 2.0), 0.0);
  const auto uniform720 = Distribution::uniform(720);
  EXPECT_NEAR(metric_perm_entropy(uniform720, ComplexityClass::factorial(), 0.5),
              oracle::t_log_t_inverse(std::log(720.0)) - 1.0, 1e-10);
  EXPECT_THROW(metric_perm_entropy(uniform720, ComplexityClass::factorial(), 0.0), std::invalid_argument);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Distribution p(oracle::random_probs(rng, 2 + t % 40));
    EXPECT_NEAR(metric_perm_entropy(p, ComplexityClass::exponential(1.0), 1.0), shannon(p), 1e-12);
    for (double a : {0.5, 2.0}) EXPECT_EQ(metric_perm_entropy(p, ComplexityClass::exponential(1.0), a), renyi(p, a));
  }
}

TEST(MetricEntropy, AlphaHierarchy) {
  std::mt19937_64 rng(5);
  for (const auto& cls : {ComplexityClass::exponential(1.0), ComplexityClass::factorial(),
                          ComplexityClass::sub_factorial(0.6)}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<double> w = oracle::random_probs(rng, 10);
      w[3] = 0.0;
      const auto p = Distribution::from_weights(w);
      const double top = topological_perm_entropy(9, cls);
      double prev = top;
      for (double a : {0.1, 0.5, 1.0, 1.5, 3.0}) {
        const double z = metric_perm_entropy(p, cls, a);
        ASSERT_LE(z, prev + 1e-12);
        prev = z;
      }
    }
  }
}

TEST(TopologicalEntropy, Examples) {
  for (const auto& cls : {ComplexityClass::exponential(1.3), ComplexityClass::factorial(),
                          ComplexityClass::sub_factorial(0.2)}) {
    EXPECT_EQ(topological_perm_entropy(1, cls), 0.0);
  }
  EXPECT_NEAR(topological_perm_entropy(5, ComplexityClass::exponential(1.0)), std::log(5.0), 1e-15);
  EXPECT_NEAR(topological_perm_entropy(5040, ComplexityClass::factorial()),
              oracle::t_log_t_inverse(std::log(5040.0)) - 1.0, 1e-10);
  EXPECT_NEAR(topological_perm_entropy(5040, ComplexityClass::factorial()), 4.18, 0.01);
  EXPECT_THROW(topological_perm_entropy(0, ComplexityClass::factorial()), std::invalid_argument);
}

TEST(Extensivity, UniformOverExpGrowth) {
  const auto fac = ComplexityClass::factorial();
  double prev = 0.0;
  for (int L = 5; L <= 12; ++L) {
    const auto W = static_cast<std::uint64_t>(std::ceil(std::exp(fac.g(L))));
    const double rate = topological_perm_entropy(W, fac) / L;
    EXPECT_NEAR(rate, (L - 1.0) / L, 0.05 * (L - 1.0) / L);
    EXPECT_GT(rate, prev);
    prev = rate;
  }
}

TEST(EntropyRate, WhiteNoiseFactorialTopological) {
  const std::vector<int> Ls{3, 4, 5, 6, 7};
  const auto e = entropy_rate(ProcessSpec{WhiteNoise{}, 200000, 1, std::nullopt}, ComplexityClass::factorial(), 0.0, Ls, 2);
  ASSERT_EQ(e.value.size(), Ls.size());
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    const int L = Ls[i];
    const double expect = (oracle::t_log_t_inverse(std::lgamma(L + 1.0)) - 1.0) / L;
    EXPECT_NEAR(e.value[i], expect, 1e-12);
    if (i) {
      EXPECT_GT(e.value[i], e.value[i - 1]);
    }
  }
  EXPECT_NEAR(e.final_value, 0.597, 1e-3);
  EXPECT_TRUE(e.warnings.empty());
}

TEST(EntropyRate, MetricBelowTopologicalAndBounded) {
  const std::vector<int> Ls{3, 4, 5, 6};
  const std::vector<double> alphas{0.0, 0.5, 1.0, 2.0};
  for (const ProcessKind& k : {ProcessKind{Logistic{}}, ProcessKind{FractionalBrownianMotion{0.5}}, ProcessKind{NoisySkewTent{}}}) {
    for (const auto& cls : {ComplexityClass::exponential(1.0), ComplexityClass::factorial()}) {
      const auto rates = entropy_rates(ProcessSpec{k, 20000, 3, std::nullopt}, cls, alphas, Ls, 2);
      for (std::size_t l = 0; l < Ls.size(); ++l) {
        const double bound = cls.z_from_renyi(std::lgamma(Ls[l] + 1.0)) / Ls[l];
        for (std::size_t a = 0; a < alphas.size(); ++a) {
          EXPECT_LE(rates[a].value[l], bound + 1e-12);
          if (a) {
            EXPECT_LE(rates[a].value[l], rates[a - 1].value[l] + 1e-12);
          }
        }
      }
    }
  }
}

TEST(EntropyRate, WarnsWhenUndersampled) {
  const std::vector<int> Ls{3, 7};
  const auto e = entropy_rate(ProcessSpec{WhiteNoise{}, 1000, 1, std::nullopt}, ComplexityClass::factorial(), 1.0, Ls, 1);
  ASSERT_EQ(e.warnings.size(), 1u);
  EXPECT_NE(e.warnings[0].find("L=7"), std::string::npos);
  EXPECT_THROW(entropy_rate(ProcessSpec{WhiteNoise{}, 5, 1, std::nullopt}, ComplexityClass::factorial(), 1.0, Ls, 1),
               std::invalid_argument);
  EXPECT_THROW(entropy_rate(ProcessSpec{WhiteNoise{}, 100, 1, std::nullopt}, ComplexityClass::factorial(), -1.0, Ls, 1),
               std::invalid_argument);
}

TEST(ClassifyGrowth, SyntheticData) {
  const std::vector<int> L{3, 4, 5, 6, 7};
  std::vector<double> lin, sub, fac;
  for (int l : L) {
    lin.push_back(0.7 * l);
    sub.push_back(0.5 * l * std::log(static_cast<double>(l)));
    fac.push_back(std::lgamma(l + 1.0));
  }
  auto f = classify_growth(L, lin);
  EXPECT_EQ(f.kind, ComplexityClass::Kind::kExponential);
  EXPECT_NEAR(f.c_hat, 0.7, 1e-9);
  f = classify_growth(L, sub);
  EXPECT_EQ(f.kind, ComplexityClass::Kind::kSubFactorial);
  EXPECT_NEAR(f.c_hat, 0.5, 1e-9);
  f = classify_growth(L, fac);
  EXPECT_EQ(f.kind, ComplexityClass::Kind::kFactorial);
  EXPECT_NEAR(f.c_hat, 1.0, 1e-9);
  EXPECT_EQ(f.fits.size(), 3u);
  EXPECT_FALSE(f.notes.empty());
}

TEST(ClassifyGrowth, Errors) {
  EXPECT_THROW(classify_growth(std::vector<int>{3, 4}, std::vector<double>{1, 2}), std::invalid_argument);
  EXPECT_THROW(classify_growth(std::vector<int>{3, 3, 4}, std::vector<double>{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(classify_growth(std::vector<int>{3, 4, 5}, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST(ClassifyGrowth, FromCurves) {
  std::vector<CensusCurve> curves;
  for (int L = 3; L <= 6; ++L) {
    const std::vector<std::size_t> grid{200000};
    curves.push_back(finite_pc_curve(ProcessSpec{WhiteNoise{}, 0, 1, std::nullopt}, L, grid, 1));
  }
  EXPECT_EQ(classify_growth(curves).kind, ComplexityClass::Kind::kFactorial);
}
