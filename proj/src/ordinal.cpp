#include "ordent/ordinal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ordent/errors.hpp"

namespace ordent {

namespace {

constexpr std::array<std::uint64_t, kMaxPatternLength + 1> make_factorials() {
  std::array<std::uint64_t, kMaxPatternLength + 1> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorials = make_factorials();

// Stable argsort of a short window: order[k] is the index of the k-th smallest
// entry, ties broken by index. Insertion sort is the fastest choice for L <= 20.
void argsort(std::span<const double> window, std::uint8_t* order) {
  const auto L = window.size();
  for (std::size_t i = 0; i < L; ++i) {
    const double v = window[i];
    std::size_t k = i;
    while (k > 0 && window[order[k - 1]] > v) {
      order[k] = order[k - 1];
      --k;
    }
    order[k] = static_cast<std::uint8_t>(i);
  }
}

std::uint64_t lehmer_rank(const std::uint8_t* perm, int L) {
  std::uint64_t code = 0;
  for (int i = 0; i < L; ++i) {
    std::uint64_t smaller_after = 0;
    for (int j = i + 1; j < L; ++j) smaller_after += perm[j] < perm[i];
    code += smaller_after * kFactorials[static_cast<std::size_t>(L - 1 - i)];
  }
  return code;
}

void check_finite(std::span<const double> window) {
  for (double v : window) {
    if (!std::isfinite(v)) throw InvalidData("window contains a non-finite sample");
  }
}

}  // namespace

std::uint64_t factorial(int L) {
  if (L < 0 || L > kMaxPatternLength) {
    throw std::invalid_argument("factorial: L must be in [0, 20], got " + std::to_string(L));
  }
  return kFactorials[static_cast<std::size_t>(L)];
}

void check_pattern_length(int L) {
  if (L < 2 || L > kMaxPatternLength) {
    throw std::invalid_argument("pattern length must be in [2, " +
                                std::to_string(kMaxPatternLength) + "], got " +
                                std::to_string(L));
  }
}

OrdinalPattern::OrdinalPattern(std::span<const int> ranks) {
  const int L = static_cast<int>(ranks.size());
  check_pattern_length(L);
  std::array<bool, kMaxPatternLength> seen{};
  for (int i = 0; i < L; ++i) {
    const int r = ranks[static_cast<std::size_t>(i)];
    if (r < 0 || r >= L || seen[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument("ranks are not a permutation of {0,...,L-1}");
    }
    seen[static_cast<std::size_t>(r)] = true;
    ranks_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r);
  }
  length_ = L;
}

OrdinalPattern::OrdinalPattern(std::initializer_list<int> ranks)
    : OrdinalPattern(std::span<const int>(ranks.begin(), ranks.size())) {}

std::vector<int> OrdinalPattern::ranks() const {
  return std::vector<int>(ranks_.begin(), ranks_.begin() + length_);
}

std::string OrdinalPattern::to_string() const {
  std::string s = "(";
  for (int i = 0; i < length_; ++i) {
    if (i) s += ',';
    s += std::to_string(ranks_[static_cast<std::size_t>(i)]);
  }
  return s + ')';
}

TimeSeries::TimeSeries(std::vector<double> samples, std::string description,
                       std::optional<std::uint64_t> seed)
    : samples_(std::move(samples)), description_(std::move(description)), seed_(seed) {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw InvalidData("sample " + std::to_string(i) + " is not finite");
    }
  }
}

OrdinalPattern pattern_of(std::span<const double> window) {
  check_pattern_length(static_cast<int>(window.size()));
  check_finite(window);
  OrdinalPattern p;
  p.length_ = static_cast<int>(window.size());
  argsort(window, p.ranks_.data());
  return p;
}

PatternCode encode(const OrdinalPattern& p) {
  std::array<std::uint8_t, kMaxPatternLength> perm{};
  for (int i = 0; i < p.length(); ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p[i]);
  return {lehmer_rank(perm.data(), p.length()), p.length()};
}

OrdinalPattern decode(PatternCode code) {
  const int L = code.length;
  check_pattern_length(L);
  if (code.value >= kFactorials[static_cast<std::size_t>(L)]) {
    throw std::invalid_argument("pattern code out of range for L=" + std::to_string(L));
  }
  // Unrank: digit i of the factorial-base expansion selects the digit-th
  // smallest unused symbol.
  std::array<std::uint8_t, kMaxPatternLength> pool{};
  std::iota(pool.begin(), pool.begin() + L, std::uint8_t{0});
  int remaining = L;
  std::uint64_t rest = code.value;
  OrdinalPattern p;
  p.length_ = L;
  for (int i = 0; i < L; ++i) {
    const std::uint64_t base = kFactorials[static_cast<std::size_t>(L - 1 - i)];
    const auto digit = static_cast<int>(rest / base);
    rest %= base;
    p.ranks_[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(digit)];
    std::copy(pool.begin() + digit + 1, pool.begin() + remaining, pool.begin() + digit);
    --remaining;
  }
  return p;
}

std::uint64_t pattern_code_of(std::span<const double> window) {
  std::array<std::uint8_t, kMaxPatternLength> order{};
  argsort(window, order.data());
  return lehmer_rank(order.data(), static_cast<int>(window.size()));
}

std::vector<std::uint64_t> extract_codes(std::span<const double> samples, int L) {
  check_pattern_length(L);
  if (samples.size() < static_cast<std::size_t>(L)) {
    throw std::invalid_argument("series of length " + std::to_string(samples.size()) +
                                " is shorter than pattern length " + std::to_string(L));
  }
  const std::size_t n = samples.size() - static_cast<std::size_t>(L) + 1;
  std::vector<std::uint64_t> codes(n);
  for (std::size_t t = 0; t < n; ++t) {
    codes[t] = pattern_code_of(samples.subspan(t, static_cast<std::size_t>(L)));
  }
  return codes;
}

std::vector<PatternCode> extract_patterns(const TimeSeries& ts, int L, int step) {
  check_pattern_length(L);
  if (step < 1) throw std::invalid_argument("step must be >= 1");
  const auto samples = ts.samples();
  if (samples.size() < static_cast<std::size_t>(L)) {
    throw std::invalid_argument("series of length " + std::to_string(samples.size()) +
                                " is shorter than pattern length " + std::to_string(L));
  }
  const std::size_t n = (samples.size() - static_cast<std::size_t>(L)) / static_cast<std::size_t>(step) + 1;
  std::vector<PatternCode> codes;
  codes.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto window = samples.subspan(k * static_cast<std::size_t>(step), static_cast<std::size_t>(L));
    codes.push_back({pattern_code_of(window), L});
  }
  return codes;
}

}  // namespace ordent
