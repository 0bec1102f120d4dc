#pragma once

// Ordinal patterns of real-valued windows and their Lehmer-code encoding.
//
// A window (x_0, ..., x_{L-1}) has pattern r = (r_0, ..., r_{L-1}) when
// x_{r_0} < x_{r_1} < ... < x_{r_{L-1}}. Equal values are ordered by index
// (the earlier sample is the smaller one), so the pattern is the stable
// argsort of the window.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ordent {

/// L! overflows 64 bits for L > 20.
inline constexpr int kMaxPatternLength = 20;

/// L! for 0 <= L <= 20.
std::uint64_t factorial(int L);

struct PatternCode;
class OrdinalPattern;
OrdinalPattern pattern_of(std::span<const double> window);
OrdinalPattern decode(PatternCode code);

class OrdinalPattern {
 public:
  /// Throws std::invalid_argument unless `ranks` is a permutation of {0..L-1}
  /// with 2 <= L <= kMaxPatternLength.
  explicit OrdinalPattern(std::span<const int> ranks);
  OrdinalPattern(std::initializer_list<int> ranks);

  int length() const noexcept { return length_; }
  int operator[](int i) const noexcept { return ranks_[static_cast<std::size_t>(i)]; }
  std::vector<int> ranks() const;

  /// "(1,0,3,2)"
  std::string to_string() const;

  friend bool operator==(const OrdinalPattern& a, const OrdinalPattern& b) noexcept {
    return a.length_ == b.length_ && a.ranks_ == b.ranks_;
  }

 private:
  OrdinalPattern() = default;
  friend OrdinalPattern pattern_of(std::span<const double> window);
  friend OrdinalPattern decode(PatternCode code);

  std::array<std::uint8_t, kMaxPatternLength> ranks_{};
  int length_ = 0;
};

/// Lehmer rank of a pattern among the L! permutations in lexicographic order.
struct PatternCode {
  std::uint64_t value = 0;
  int length = 0;

  friend auto operator<=>(const PatternCode&, const PatternCode&) = default;
};

/// Real-valued samples, all finite.
class TimeSeries {
 public:
  TimeSeries() = default;
  /// Throws InvalidData on a non-finite sample.
  explicit TimeSeries(std::vector<double> samples, std::string description = {},
                      std::optional<std::uint64_t> seed = std::nullopt);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const std::string& description() const noexcept { return description_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

 private:
  std::vector<double> samples_;
  std::string description_;
  std::optional<std::uint64_t> seed_;
};

/// Throws std::invalid_argument for windows shorter than 2 or longer than
/// kMaxPatternLength, InvalidData for non-finite entries.
OrdinalPattern pattern_of(std::span<const double> window);

PatternCode encode(const OrdinalPattern& p);

/// Inverse of encode. Throws std::invalid_argument when code.value >= L!.
OrdinalPattern decode(PatternCode code);

/// Code of the window's pattern without materializing the pattern. The window
/// must be finite; its length must be in [2, kMaxPatternLength].
std::uint64_t pattern_code_of(std::span<const double> window);

/// Codes of the windows starting at 0, step, 2*step, ... that fit in the series.
/// Returns floor((T-L)/step)+1 codes. Throws std::invalid_argument when T < L,
/// step < 1 or L is outside [2, kMaxPatternLength].
std::vector<PatternCode> extract_patterns(const TimeSeries& ts, int L, int step = 1);

/// Same as extract_patterns with step 1, returning bare code values.
std::vector<std::uint64_t> extract_codes(std::span<const double> samples, int L);

/// Throws std::invalid_argument unless 2 <= L <= kMaxPatternLength.
void check_pattern_length(int L);

}  // namespace ordent
