#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "ordent/census.hpp"
#include "ordent/logistic.hpp"
#include "ordent/process.hpp"

#include <json.hpp>

using namespace ordent;

namespace {

const double kS5 = std::sqrt(5.0);

void expect_interval(const Interval& iv, double lo, double hi, bool lo_closed, bool hi_closed) {
  EXPECT_NEAR(iv.lo, lo, 1e-12);
  EXPECT_NEAR(iv.hi, hi, 1e-12);
  EXPECT_EQ(iv.lo_closed, lo_closed);
  EXPECT_EQ(iv.hi_closed, hi_closed);
}

}  // namespace

TEST(ArcsineMeasure, Values) {
  EXPECT_EQ(arcsine_cdf(0.0), 0.0);
  EXPECT_NEAR(arcsine_cdf(1.0), 1.0, 1e-16);
  EXPECT_NEAR(measure_of(Interval{0.0, 0.25}), 1.0 / 3, 1e-15);
  EXPECT_NEAR(measure_of(Interval{0.0, (2 - std::sqrt(3.0)) / 4}), 1.0 / 6, 1e-15);
  EXPECT_NEAR(measure_of(Interval{0.0, (3 - kS5) / 8}), 1.0 / 5, 1e-15);
  EXPECT_THROW(measure_of(Interval{-0.1, 0.5}), std::invalid_argument);
  EXPECT_THROW(measure_of(Interval{0.6, 0.5}), std::invalid_argument);
  EXPECT_THROW(arcsine_cdf(1.5), std::invalid_argument);
  double prev = -1;
  for (double x = 0; x <= 1.0; x += 0.001) {
    ASSERT_GT(arcsine_cdf(x), prev);
    prev = arcsine_cdf(x);
  }
}

TEST(ArcsineMeasure, AgreesWithQuadrature) {
  // x = u^2 removes the singularity at 0: the integrand becomes 2/(pi sqrt(1-u^2))
  for (double b : {0.1, 0.3, 0.77, 0.99}) {
    const int n = 20000;
    const double top = std::sqrt(b), h = top / n;
    const auto f = [](double u) { return 2.0 / (std::numbers::pi * std::sqrt(1.0 - u * u)); };
    double s = f(0.0) + f(top);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    EXPECT_NEAR(arcsine_cdf(b), s * h / 3.0, 1e-10) << b;
  }
}

TEST(OrdinalCells, OrderTwo) {
  const auto c = ordinal_cells(2);
  ASSERT_EQ(c.cells.size(), 2u);
  ASSERT_EQ(c.cells[0].intervals.size(), 1u);
  expect_interval(c.cells[0].intervals[0], 0.0, 0.75, true, true);
  expect_interval(c.cells[1].intervals[0], 0.75, 1.0, false, true);
  ASSERT_EQ(c.boundaries.size(), 1u);
  EXPECT_EQ(c.boundaries[0], 0.75);
}

TEST(OrdinalCells, OrderThree) {
  const auto c = ordinal_cells(3);
  ASSERT_EQ(c.cells.size(), 5u);
  EXPECT_EQ(c.find({2, 1, 0}), nullptr);
  const auto* p012 = c.find({0, 1, 2});
  ASSERT_NE(p012, nullptr);
  ASSERT_EQ(p012->intervals.size(), 2u);
  expect_interval(p012->intervals[0], 0.0, 0.25, true, true);
  expect_interval(p012->intervals[1], 0.75, 0.75, true, true);
  expect_interval(c.find({0, 2, 1})->intervals.at(0), 0.25, (5 - kS5) / 8, false, true);
  expect_interval(c.find({2, 0, 1})->intervals.at(0), (5 - kS5) / 8, 0.75, false, false);
  expect_interval(c.find({1, 0, 2})->intervals.at(0), 0.75, (5 + kS5) / 8, false, true);
  expect_interval(c.find({1, 2, 0})->intervals.at(0), (5 + kS5) / 8, 1.0, false, true);
  const std::vector<double> expected{0.25, (5 - kS5) / 8, 0.75, (5 + kS5) / 8};
  ASSERT_EQ(c.boundaries.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(c.boundaries[i], expected[i], 1e-12);
}

TEST(OrdinalCells, PartitionCompleteAndLabelsConsistent) {
  for (int L = 2; L <= 5; ++L) {
    const auto c = ordinal_cells(L);
    double total = 0;
    for (const auto& cell : c.cells) total += measure_of(cell.intervals);
    EXPECT_NEAR(total, 1.0, 1e-12) << "L=" << L;
    // interior sample points carry the label of their cell
    for (const auto& cell : c.cells) {
      for (const auto& iv : cell.intervals) {
        if (iv.is_point()) continue;
        for (double f : {0.1, 0.5, 0.9}) {
          double x = iv.lo + f * (iv.hi - iv.lo);
          std::vector<double> orbit{x};
          for (int k = 1; k < L; ++k) orbit.push_back(4 * orbit.back() * (1 - orbit.back()));
          if (iv.hi - iv.lo > 1e-6) {
            ASSERT_EQ(pattern_of(orbit), cell.pattern) << "L=" << L << " x=" << x;
          }
        }
      }
    }
  }
  EXPECT_THROW(ordinal_cells(1), std::invalid_argument);
  EXPECT_THROW(ordinal_cells(6), std::invalid_argument);
}

TEST(OrdinalCells, PositiveMeasureCellsMatchLongOrbit) {
  const auto ts = generate(ProcessSpec{Logistic{4.0, 0.3}, 1000000, 0, std::nullopt});
  for (int L = 2; L <= 5; ++L) {
    const auto d = census(ts, L);
    const auto exact = exact_pattern_probs(L);
    std::size_t positive = 0;
    for (const auto& [code, p] : exact) {
      if (p > 0) ++positive;
      const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / d.total());
      EXPECT_NEAR(d.prob(code), p, 3 * se + 1e-9) << "L=" << L << " " << decode({code, L}).to_string();
    }
    EXPECT_EQ(positive, d.allowed_count()) << "L=" << L;
  }
}

TEST(OrdinalCells, RefinementConsistency) {
  for (int L = 2; L <= 4; ++L) {
    const auto coarse = ordinal_cells(L), fine = ordinal_cells(L + 1);
    for (const auto& cell : fine.cells) {
      // the first L entries of the orbit decide the coarse pattern
      for (const auto& iv : cell.intervals) {
        const double x = iv.is_point() ? iv.lo : 0.5 * (iv.lo + iv.hi);
        int hits = 0;
        for (const auto& c : coarse.cells) {
          for (const auto& civ : c.intervals) {
            const bool inside = (x > civ.lo || (civ.lo_closed && x == civ.lo)) && (x < civ.hi || (civ.hi_closed && x == civ.hi));
            if (inside && !iv.is_point()) {
              ++hits;
              EXPECT_LE(civ.lo, iv.lo + 1e-12);
              EXPECT_GE(civ.hi, iv.hi - 1e-12);
            } else if (inside) {
              ++hits;
            }
          }
        }
        EXPECT_EQ(hits, 1) << "L=" << L + 1 << " x=" << x;
      }
    }
  }
}

TEST(Preimage, BranchesAndInvariance) {
  const auto pre = preimage(Interval{0.0, 0.25});
  ASSERT_EQ(pre.size(), 2u);
  EXPECT_NEAR(pre[0].hi, (1 - std::sqrt(0.75)) / 2, 1e-16);
  EXPECT_NEAR(pre[1].lo, (1 + std::sqrt(0.75)) / 2, 1e-16);
  for (const auto& cell : ordinal_cells(3).cells) {
    double mu_pre = 0;
    for (const auto& iv : cell.intervals) mu_pre += measure_of(preimage(iv));
    EXPECT_NEAR(mu_pre, measure_of(cell.intervals), 1e-10);
  }
}

TEST(ExactTransitions, RowOfIncreasingPattern) {
  const auto m = exact_transition_probs(3);
  const auto r = encode({0, 1, 2}).value;
  EXPECT_NEAR(m.at(r, encode({0, 1, 2}).value), 0.5, 1e-12);
  EXPECT_NEAR(m.at(r, encode({0, 2, 1}).value), 0.1, 1e-12);
  EXPECT_NEAR(m.at(r, encode({2, 0, 1}).value), 0.4, 1e-12);
  EXPECT_EQ(m.rows.at(r).size(), 3u);
  for (const auto& [from, row] : m.rows) {
    double s = 0;
    for (const auto& [to, p] : row) s += p;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
  EXPECT_THROW(exact_transition_probs(5), std::invalid_argument);
}

TEST(ExactTransitions, AgreeWithLongOrbit) {
  const auto ts = generate(ProcessSpec{Logistic{4.0, 0.2}, 1000000, 0, std::nullopt});
  for (int L = 2; L <= 4; ++L) {
    const auto exact = exact_transition_probs(L);
    const auto empirical = transition_matrix(ts, L);
    for (const auto& [from, row] : exact.rows) {
      for (std::uint64_t to = 0; to < factorial(L); ++to) {
        EXPECT_NEAR(empirical.at(from, to), exact.at(from, to), 0.01) << "L=" << L;
      }
    }
  }
}

TEST(LogisticJson, CellsAndTransitionsParse) {
  std::stringstream a, b;
  write_cells_json(a, ordinal_cells(3));
  write_transitions_json(b, exact_transition_probs(3));
  const auto cells = nlohmann::json::parse(a.str());
  EXPECT_EQ(cells["schema_version"], 1);
  EXPECT_EQ(cells["cells"].size(), 5u);
  EXPECT_EQ(cells["boundaries"][2].get<double>(), 0.75);
  const auto rows = nlohmann::json::parse(b.str());
  EXPECT_EQ(rows["rows"][0]["from"], nlohmann::json::array({0, 1, 2}));
  EXPECT_NE(a.str().find("0.34549150281252"), std::string::npos);
}
