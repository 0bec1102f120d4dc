#include "ordent/logistic.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ordent {

double arcsine_cdf(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("arcsine CDF needs x in [0,1]");
  return 2.0 / std::numbers::pi * std::asin(std::sqrt(x));
}

double measure_of(const Interval& iv) {
  if (!(iv.lo >= 0.0 && iv.lo <= iv.hi && iv.hi <= 1.0)) {
    throw std::invalid_argument("interval must satisfy 0 <= lo <= hi <= 1");
  }
  return arcsine_cdf(iv.hi) - arcsine_cdf(iv.lo);
}

double measure_of(std::span<const Interval> intervals) {
  double m = 0.0;
  for (const auto& iv : intervals) m += measure_of(iv);
  return m;
}

const Cell* OrdinalCellSet::find(const OrdinalPattern& pattern) const {
  for (const auto& c : cells) {
    if (c.pattern == pattern) return &c;
  }
  return nullptr;
}

namespace {

constexpr int kGrid = 10000;
// Roots closer than this are the same boundary point.
constexpr double kClusterTol = 1e-10;

double logistic(double x) { return 4.0 * x * (1.0 - x); }

std::array<double, kMaxExactCellLength> orbit(double x, int L) {
  std::array<double, kMaxExactCellLength> v{};
  v[0] = x;
  for (int k = 1; k < L; ++k) v[static_cast<std::size_t>(k)] = logistic(v[static_cast<std::size_t>(k - 1)]);
  return v;
}

double diff(double x, int i, int j, int L) {
  const auto v = orbit(x, L);
  return v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
}

struct Root {
  double x;
  int i, j;
  bool exact;  // d(x) == 0 on a grid point
};

double bisect(double a, double b, int i, int j, int L) {
  double da = diff(a, i, j, L);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double dm = diff(m, i, j, L);
    if (dm == 0.0) return m;
    if ((dm < 0.0) == (da < 0.0)) {
      a = m;
      da = dm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Golden-section minimum of |d| on [a, b].
double min_abs(double a, double b, int i, int j, int L, double& at) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (std::abs(diff(c, i, j, L)) < std::abs(diff(d, i, j, L))) {
      b = d;
    } else {
      a = c;
    }
    c = b - r * (b - a);
    d = a + r * (b - a);
  }
  at = 0.5 * (a + b);
  return std::abs(diff(at, i, j, L));
}

std::vector<Root> find_roots(int L) {
  std::vector<Root> roots;
  std::vector<double> xs(kGrid + 1), d(kGrid + 1);
  for (int k = 0; k <= kGrid; ++k) xs[static_cast<std::size_t>(k)] = static_cast<double>(k) / kGrid;
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      for (std::size_t k = 0; k < xs.size(); ++k) d[k] = diff(xs[k], i, j, L);
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (d[k] == 0.0) {
          roots.push_back({xs[k], i, j, true});
          continue;
        }
        if (k + 1 < xs.size() && d[k + 1] != 0.0 && (d[k] < 0.0) != (d[k + 1] < 0.0)) {
          roots.push_back({bisect(xs[k], xs[k + 1], i, j, L), i, j, false});
        }
        // a touching root shows up as a small local minimum of |d| without a sign change
        if (k > 0 && k + 1 < xs.size() && d[k - 1] != 0.0 && d[k + 1] != 0.0 &&
            (d[k - 1] < 0.0) == (d[k] < 0.0) && (d[k + 1] < 0.0) == (d[k] < 0.0) &&
            std::abs(d[k]) <= std::abs(d[k - 1]) && std::abs(d[k]) <= std::abs(d[k + 1]) &&
            std::abs(d[k]) < 1e-3) {
          double at = 0.0;
          if (min_abs(xs[k - 1], xs[k + 1], i, j, L, at) < 1e-13) roots.push_back({at, i, j, false});
        }
      }
    }
  }
  return roots;
}

struct Point {
  double x;
  std::vector<std::pair<int, int>> ties;
};

std::vector<Point> cluster(std::vector<Root> roots) {
  // endpoints are always present
  roots.push_back({0.0, 0, 0, true});
  roots.push_back({1.0, 0, 0, true});
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.x < b.x; });

  std::vector<Point> points;
  std::size_t k = 0;
  while (k < roots.size()) {
    std::size_t e = k + 1;
    while (e < roots.size() && roots[e].x - roots[e - 1].x <= kClusterTol) ++e;
    Point p{0.0, {}};
    double sum = 0.0;
    bool snapped = false;
    for (std::size_t m = k; m < e; ++m) {
      if (roots[m].i != roots[m].j) p.ties.emplace_back(roots[m].i, roots[m].j);
      sum += roots[m].x;
      // prefer exact positions: endpoints, then exact grid zeros
      if (roots[m].exact && !snapped) {
        p.x = roots[m].x;
        snapped = true;
      }
      if (roots[m].x == 0.0 || roots[m].x == 1.0) p.x = roots[m].x;
    }
    if (!snapped) p.x = sum / static_cast<double>(e - k);
    points.push_back(std::move(p));
    k = e;
  }
  return points;
}

std::uint64_t point_code(const Point& p, int L) {
  std::array<int, kMaxExactCellLength> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  for (const auto& [i, j] : p.ties) {
    const int a = find(i), b = find(j);
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  auto v = orbit(p.x, L);
  auto tied = v;
  for (int k = 0; k < L; ++k) tied[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(find(k))];
  return pattern_code_of(std::span<const double>(tied.data(), static_cast<std::size_t>(L)));
}

std::uint64_t gap_code(double a, double b, int L) {
  const auto v = orbit(0.5 * (a + b), L);
  return pattern_code_of(std::span<const double>(v.data(), static_cast<std::size_t>(L)));
}

}  // namespace

OrdinalCellSet ordinal_cells(int L) {
  if (L < 2 || L > kMaxExactCellLength) {
    throw std::invalid_argument("ordinal_cells supports 2 <= L <= " + std::to_string(kMaxExactCellLength));
  }
  const auto points = cluster(find_roots(L));

  // Alternating sequence point, gap, point, ..., point.
  struct Element {
    Interval iv;
    std::uint64_t code;
  };
  std::vector<Element> seq;
  for (std::size_t k = 0; k < points.size(); ++k) {
    seq.push_back({{points[k].x, points[k].x, true, true}, point_code(points[k], L)});
    if (k + 1 < points.size()) {
      seq.push_back({{points[k].x, points[k + 1].x, false, false}, gap_code(points[k].x, points[k + 1].x, L)});
    }
  }

  OrdinalCellSet out;
  out.length = L;
  for (std::size_t k = 2; k + 2 < seq.size(); k += 2) {
    if (seq[k - 1].code != seq[k].code || seq[k].code != seq[k + 1].code) out.boundaries.push_back(seq[k].iv.lo);
  }

  std::map<std::uint64_t, std::vector<Interval>> by_code;
  std::size_t k = 0;
  while (k < seq.size()) {
    std::size_t e = k + 1;
    while (e < seq.size() && seq[e].code == seq[k].code) ++e;
    const auto& first = seq[k].iv;
    const auto& last = seq[e - 1].iv;
    by_code[seq[k].code].push_back({first.lo, last.hi, first.is_point(), last.is_point()});
    k = e;
  }
  for (auto& [code, ivs] : by_code) {
    out.cells.push_back({decode({code, L}), std::move(ivs)});
  }
  return out;
}

std::vector<Interval> preimage(const Interval& iv) {
  if (!(iv.lo >= 0.0 && iv.lo <= iv.hi && iv.hi <= 1.0)) {
    throw std::invalid_argument("interval must satisfy 0 <= lo <= hi <= 1");
  }
  const double s_lo = std::sqrt(1.0 - iv.lo), s_hi = std::sqrt(1.0 - iv.hi);
  return {
      {(1.0 - s_lo) / 2.0, (1.0 - s_hi) / 2.0, iv.lo_closed, iv.hi_closed},
      {(1.0 + s_hi) / 2.0, (1.0 + s_lo) / 2.0, iv.hi_closed, iv.lo_closed},
  };
}

std::map<std::uint64_t, double> exact_pattern_probs(int L) {
  std::map<std::uint64_t, double> out;
  for (const auto& c : ordinal_cells(L).cells) out[encode(c.pattern).value] = measure_of(c.intervals);
  return out;
}

TransitionMatrix exact_transition_probs(int L) {
  if (L < 2 || L > kMaxExactTransitionLength) {
    throw std::invalid_argument("exact_transition_probs supports 2 <= L <= " +
                                std::to_string(kMaxExactTransitionLength));
  }
  const auto cells = ordinal_cells(L);
  std::vector<std::vector<Interval>> pre(cells.cells.size());
  for (std::size_t b = 0; b < cells.cells.size(); ++b) {
    for (const auto& iv : cells.cells[b].intervals) {
      for (const auto& p : preimage(iv)) pre[b].push_back(p);
    }
  }

  TransitionMatrix m;
  m.length = L;
  for (const auto& from : cells.cells) {
    const double mu = measure_of(from.intervals);
    if (!(mu > 0.0)) continue;
    auto& row = m.rows[encode(from.pattern).value];
    for (std::size_t b = 0; b < cells.cells.size(); ++b) {
      double joint = 0.0;
      for (const auto& x : from.intervals) {
        for (const auto& y : pre[b]) {
          const double lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
          // overlaps below the root tolerance are touching endpoints
          if (hi - lo > kClusterTol) joint += arcsine_cdf(hi) - arcsine_cdf(lo);
        }
      }
      if (joint > 0.0) row[encode(cells.cells[b].pattern).value] = joint / mu;
    }
  }
  return m;
}

namespace {

std::string num(double v) {
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), end);
}

std::string ranks_json(const OrdinalPattern& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace

void write_cells_json(std::ostream& out, const OrdinalCellSet& cells) {
  out << "{\"schema_version\":1,\"L\":" << cells.length << ",\"boundaries\":[";
  for (std::size_t i = 0; i < cells.boundaries.size(); ++i) out << (i ? "," : "") << num(cells.boundaries[i]);
  out << "],\"cells\":[";
  for (std::size_t c = 0; c < cells.cells.size(); ++c) {
    const auto& cell = cells.cells[c];
    out << (c ? "," : "") << "{\"pattern\":" << ranks_json(cell.pattern) << ",\"code\":" << encode(cell.pattern).value
        << ",\"measure\":" << num(measure_of(cell.intervals)) << ",\"intervals\":[";
    for (std::size_t i = 0; i < cell.intervals.size(); ++i) {
      const auto& iv = cell.intervals[i];
      out << (i ? "," : "") << "{\"lo\":" << num(iv.lo) << ",\"hi\":" << num(iv.hi)
          << ",\"lo_closed\":" << (iv.lo_closed ? "true" : "false")
          << ",\"hi_closed\":" << (iv.hi_closed ? "true" : "false") << "}";
    }
    out << "]}";
  }
  out << "]}\n";
}

void write_transitions_json(std::ostream& out, const TransitionMatrix& m) {
  out << "{\"schema_version\":1,\"L\":" << m.length << ",\"rows\":[";
  bool first_row = true;
  for (const auto& [from, row] : m.rows) {
    out << (first_row ? "" : ",") << "{\"from\":" << ranks_json(decode({from, m.length})) << ",\"to\":[";
    first_row = false;
    bool first = true;
    for (const auto& [to, p] : row) {
      out << (first ? "" : ",") << "{\"pattern\":" << ranks_json(decode({to, m.length})) << ",\"p\":" << num(p) << "}";
      first = false;
    }
    out << "]}";
  }
  out << "]}\n";
}

}  // namespace ordent
