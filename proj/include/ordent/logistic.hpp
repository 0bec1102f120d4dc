#pragma once

// Exact results for the full logistic map f(x) = 4x(1-x) on [0,1]: the
// ordinal partition of order L, the arcsine invariant measure
// F(x) = (2/pi) arcsin(sqrt(x)), and pattern and transition probabilities
// computed from them.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "ordent/census.hpp"
#include "ordent/ordinal.hpp"

namespace ordent {

/// A subinterval of [0,1]. lo == hi with both ends closed is a single point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool is_point() const noexcept { return lo == hi; }
};

/// (2/pi) arcsin(sqrt(x)). Throws std::invalid_argument outside [0,1].
double arcsine_cdf(double x);

/// Sum of F(hi) - F(lo). Throws std::invalid_argument unless
/// 0 <= lo <= hi <= 1 for every interval.
double measure_of(std::span<const Interval> intervals);
double measure_of(const Interval& interval);

struct Cell {
  OrdinalPattern pattern;
  std::vector<Interval> intervals;
};

struct OrdinalCellSet {
  int length = 0;
  /// Nonempty cells, ascending by pattern code.
  std::vector<Cell> cells;
  /// Interior points where the pattern changes, ascending.
  std::vector<double> boundaries;

  /// nullptr when the pattern's cell is empty.
  const Cell* find(const OrdinalPattern& pattern) const;
};

/// Supported orders for ordinal_cells.
inline constexpr int kMaxExactCellLength = 5;
/// Supported orders for exact_transition_probs.
inline constexpr int kMaxExactTransitionLength = 4;

/// Cells {x : (x, f(x), ..., f^{L-1}(x)) has pattern r}. Boundaries are the
/// roots of f^i - f^j, bracketed on a 10^4-point grid and bisected to 1e-12.
/// At a boundary, tied values are ordered by index, so a boundary point joins
/// the cell its tie rule selects. Throws std::invalid_argument unless
/// 2 <= L <= kMaxExactCellLength.
OrdinalCellSet ordinal_cells(int L);

/// Preimage of an interval under f: the left branch (1 - sqrt(1-y))/2 and the
/// right branch (1 + sqrt(1-y))/2, in that order.
std::vector<Interval> preimage(const Interval& interval);

/// mu(P_r) for every nonempty cell, keyed by pattern code.
std::map<std::uint64_t, double> exact_pattern_probs(int L);

/// rows[r][r'] = mu(P_r and f^{-1} P_r') / mu(P_r) for cells of positive
/// measure; only positive entries are stored. Throws std::invalid_argument
/// unless 2 <= L <= kMaxExactTransitionLength.
TransitionMatrix exact_transition_probs(int L);

/// {"schema_version":1,"L":..,"boundaries":[..],"cells":[{"pattern":[..],
/// "code":..,"measure":..,"intervals":[{"lo":..,"hi":..,"lo_closed":..,
/// "hi_closed":..}]}]} with 17 significant digits.
void write_cells_json(std::ostream& out, const OrdinalCellSet& cells);
/// {"schema_version":1,"L":..,"rows":[{"from":[..],"to":[{"pattern":[..],
/// "p":..}]}]}
void write_transitions_json(std::ostream& out, const TransitionMatrix& m);

}  // namespace ordent
