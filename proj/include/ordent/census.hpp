#pragma once

// Pattern counting: empirical pattern distributions, missing patterns,
// transition matrices between consecutive windows and the finite
// permutation-complexity curve g(L, T) = ln(#distinct L-patterns in the first
// T samples).

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordent/entropy.hpp"
#include "ordent/ordinal.hpp"
#include "ordent/process.hpp"

namespace ordent {

/// Counts are dense (one slot per code) up to this length, hashed above.
inline constexpr int kDenseCountMaxLength = 10;

class PatternDistribution {
 public:
  explicit PatternDistribution(int L);

  void add(std::uint64_t code, std::uint64_t n = 1);

  int length() const noexcept { return length_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t count(std::uint64_t code) const;
  /// count / total; 0 when nothing has been counted.
  double prob(std::uint64_t code) const;
  /// Number of codes with a positive count.
  std::size_t allowed_count() const noexcept { return allowed_; }

  /// (code, count) for every observed code, ascending by code.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> observed() const;

  /// Probabilities of the observed codes (ascending by code). Zero-count codes
  /// are dropped, which leaves every entropy unchanged. Throws
  /// std::invalid_argument when empty.
  Distribution to_distribution() const;

 private:
  int length_;
  std::uint64_t total_ = 0;
  std::size_t allowed_ = 0;
  std::vector<std::uint64_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

/// Counts over all sliding windows (step 1). Throws std::invalid_argument
/// when T < L.
PatternDistribution census(const TimeSeries& ts, int L);
PatternDistribution census(std::span<const double> samples, int L);

/// Codes never observed. A missing pattern is not necessarily forbidden: it may
/// just be rare or supported on unstable orbits. Enumerates all L! codes, so
/// L is limited to kDenseCountMaxLength.
std::vector<PatternCode> forbidden_patterns(const PatternDistribution& d);

inline constexpr const char* kMissingPatternCaveat = "missing patterns are not necessarily forbidden";

struct TransitionMatrix {
  int length = 0;
  /// rows[r][r'] = P(next window has pattern r' | window has pattern r).
  std::map<std::uint64_t, std::map<std::uint64_t, double>> rows;

  /// 0 for absent rows or entries.
  double at(std::uint64_t from, std::uint64_t to) const;
};

/// Empirical transitions between consecutive windows. Throws
/// std::invalid_argument when T < L + 1.
TransitionMatrix transition_matrix(const TimeSeries& ts, int L);

struct CensusCurve {
  int length = 0;
  std::vector<std::size_t> t_grid;
  /// Mean over realizations of g(L, T) for each grid entry.
  std::vector<double> g_mean;
  /// Sample standard deviation over realizations (0 for one realization).
  std::vector<double> g_stddev;
  /// Per realization, g(L, T) for each grid entry.
  std::vector<std::vector<double>> per_realization;
};

enum class CurveStop {
  /// Scan every grid entry.
  kNever,
  /// Stop once all L! patterns have appeared.
  kAllSeen,
  /// Stop once all L! patterns have appeared, or once the distinct count has
  /// not changed over the trailing 10% of the grid.
  kAllSeenOrStagnant,
};

/// g(L, T) for T in t_grid over R realizations with seeds spec.seed + r.
/// After an early stop the remaining grid entries repeat the last value.
/// Requires a strictly increasing grid with every T >= L. spec.length is
/// ignored: each realization has max(t_grid) samples.
CensusCurve finite_pc_curve(const ProcessSpec& spec, int L, std::span<const std::size_t> t_grid,
                            int realizations, CurveStop stop = CurveStop::kAllSeenOrStagnant);

/// g(L, T) for a single series.
std::vector<double> finite_pc_values(std::span<const double> samples, int L,
                                     std::span<const std::size_t> t_grid, CurveStop stop);

}  // namespace ordent
