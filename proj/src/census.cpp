#include "ordent/census.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ordent/parallel.hpp"

namespace ordent {

PatternDistribution::PatternDistribution(int L) : length_(L) {
  check_pattern_length(L);
  if (L <= kDenseCountMaxLength) dense_.assign(factorial(L), 0);
}

void PatternDistribution::add(std::uint64_t code, std::uint64_t n) {
  if (code >= factorial(length_)) throw std::invalid_argument("pattern code out of range");
  if (n == 0) return;
  std::uint64_t& slot = dense_.empty() ? sparse_[code] : dense_[code];
  if (slot == 0) ++allowed_;
  slot += n;
  total_ += n;
}

std::uint64_t PatternDistribution::count(std::uint64_t code) const {
  if (!dense_.empty()) return code < dense_.size() ? dense_[code] : 0;
  const auto it = sparse_.find(code);
  return it == sparse_.end() ? 0 : it->second;
}

double PatternDistribution::prob(std::uint64_t code) const {
  return total_ == 0 ? 0.0 : static_cast<double>(count(code)) / static_cast<double>(total_);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> PatternDistribution::observed() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(allowed_);
  if (!dense_.empty()) {
    for (std::uint64_t c = 0; c < dense_.size(); ++c) {
      if (dense_[c] > 0) out.emplace_back(c, dense_[c]);
    }
  } else {
    out.assign(sparse_.begin(), sparse_.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

Distribution PatternDistribution::to_distribution() const {
  if (total_ == 0) throw std::invalid_argument("empty pattern distribution");
  std::vector<double> w;
  w.reserve(allowed_);
  for (const auto& [code, n] : observed()) w.push_back(static_cast<double>(n));
  return Distribution::from_weights(w);
}

PatternDistribution census(std::span<const double> samples, int L) {
  check_pattern_length(L);
  if (samples.size() < static_cast<std::size_t>(L)) {
    throw std::invalid_argument("series shorter than pattern length");
  }
  PatternDistribution d(L);
  const std::size_t n = samples.size() - static_cast<std::size_t>(L) + 1;
  for (std::size_t t = 0; t < n; ++t) d.add(pattern_code_of(samples.subspan(t, static_cast<std::size_t>(L))));
  return d;
}

PatternDistribution census(const TimeSeries& ts, int L) { return census(ts.samples(), L); }

std::vector<PatternCode> forbidden_patterns(const PatternDistribution& d) {
  if (d.length() > kDenseCountMaxLength) {
    throw std::invalid_argument("missing-pattern enumeration supports L <= " +
                                std::to_string(kDenseCountMaxLength));
  }
  std::vector<PatternCode> out;
  const std::uint64_t n = factorial(d.length());
  for (std::uint64_t c = 0; c < n; ++c) {
    if (d.count(c) == 0) out.push_back({c, d.length()});
  }
  return out;
}

double TransitionMatrix::at(std::uint64_t from, std::uint64_t to) const {
  const auto row = rows.find(from);
  if (row == rows.end()) return 0.0;
  const auto e = row->second.find(to);
  return e == row->second.end() ? 0.0 : e->second;
}

TransitionMatrix transition_matrix(const TimeSeries& ts, int L) {
  check_pattern_length(L);
  if (ts.size() < static_cast<std::size_t>(L) + 1) {
    throw std::invalid_argument("transition matrix needs T >= L + 1");
  }
  const auto codes = extract_codes(ts.samples(), L);
  std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> counts;
  for (std::size_t t = 0; t + 1 < codes.size(); ++t) ++counts[codes[t]][codes[t + 1]];

  TransitionMatrix m;
  m.length = L;
  for (const auto& [from, row] : counts) {
    std::uint64_t total = 0;
    for (const auto& [to, n] : row) total += n;
    auto& out = m.rows[from];
    for (const auto& [to, n] : row) out[to] = static_cast<double>(n) / static_cast<double>(total);
  }
  return m;
}

namespace {

void check_grid(int L, std::span<const std::size_t> t_grid) {
  check_pattern_length(L);
  if (t_grid.empty()) throw std::invalid_argument("empty T grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < static_cast<std::size_t>(L)) {
      throw std::invalid_argument("every T in the grid must be >= L");
    }
    if (i > 0 && t_grid[i] <= t_grid[i - 1]) throw std::invalid_argument("T grid must be strictly increasing");
  }
}

// Tracks which codes have been seen; dense bitmap where affordable.
class SeenSet {
 public:
  explicit SeenSet(int L) {
    if (L <= kDenseCountMaxLength) bits_.assign(factorial(L), false);
  }
  bool insert(std::uint64_t code) {
    if (bits_.empty()) return sparse_.insert(code).second;
    if (bits_[code]) return false;
    bits_[code] = true;
    return true;
  }

 private:
  std::vector<bool> bits_;
  std::unordered_set<std::uint64_t> sparse_;
};

}  // namespace

std::vector<double> finite_pc_values(std::span<const double> samples, int L,
                                     std::span<const std::size_t> t_grid, CurveStop stop) {
  check_grid(L, t_grid);
  if (samples.size() < t_grid.back()) throw std::invalid_argument("series shorter than max(T grid)");

  const std::uint64_t all = factorial(L);
  const std::size_t n = t_grid.size();
  const std::size_t lookback = (n + 9) / 10;
  const auto Lz = static_cast<std::size_t>(L);

  SeenSet seen(L);
  std::uint64_t distinct = 0;
  std::vector<std::uint64_t> counts;
  counts.reserve(n);
  std::size_t next_window = 0;  // windows [0, next_window) have been scanned
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t windows = t_grid[k] - Lz + 1;
    for (; next_window < windows && distinct < all; ++next_window) {
      if (seen.insert(pattern_code_of(samples.subspan(next_window, Lz)))) ++distinct;
    }
    counts.push_back(distinct);
    if (stop == CurveStop::kNever) continue;
    const bool saturated = distinct == all;
    const bool stagnant = stop == CurveStop::kAllSeenOrStagnant && k >= lookback && counts[k - lookback] == distinct;
    if (saturated || stagnant) break;
  }
  counts.resize(n, counts.back());

  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = std::log(static_cast<double>(counts[k]));
  return g;
}

CensusCurve finite_pc_curve(const ProcessSpec& spec, int L, std::span<const std::size_t> t_grid,
                            int realizations, CurveStop stop) {
  check_grid(L, t_grid);
  if (realizations < 1) throw std::invalid_argument("need at least one realization");
  ProcessSpec base = spec;
  base.length = t_grid.back();
  validate(base);

  CensusCurve curve;
  curve.length = L;
  curve.t_grid.assign(t_grid.begin(), t_grid.end());
  curve.per_realization.resize(static_cast<std::size_t>(realizations));
  parallel_for(curve.per_realization.size(), [&](std::size_t r) {
    const TimeSeries ts = generate(with_seed_offset(base, r));
    curve.per_realization[r] = finite_pc_values(ts.samples(), L, t_grid, stop);
  });

  const std::size_t n = t_grid.size();
  const auto R = static_cast<double>(realizations);
  curve.g_mean.assign(n, 0.0);
  curve.g_stddev.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double mean = 0.0;
    for (const auto& g : curve.per_realization) mean += g[k];
    mean /= R;
    double ss = 0.0;
    for (const auto& g : curve.per_realization) ss += (g[k] - mean) * (g[k] - mean);
    curve.g_mean[k] = mean;
    curve.g_stddev[k] = realizations > 1 ? std::sqrt(ss / (R - 1.0)) : 0.0;
  }
  return curve;
}

}  // namespace ordent
