#include "ordent/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ordent/lambert.hpp"
#include "ordent/parallel.hpp"

namespace ordent {

namespace {

std::string format_c(double c) {
  std::ostringstream s;
  s << c;
  return s.str();
}

}  // namespace

ComplexityClass ComplexityClass::exponential(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("exponential class needs c > 0");
  ComplexityClass k;
  k.kind_ = Kind::kExponential;
  k.c_ = c;
  k.name_ = "exponential(c=" + format_c(c) + ")";
  k.domain_min_ = 0.0;
  k.g_ = [c](double t) { return c * t; };
  k.g_inverse_ = [c](double s) { return s / c; };
  return k;
}

ComplexityClass ComplexityClass::factorial() {
  ComplexityClass k;
  k.kind_ = Kind::kFactorial;
  k.c_ = 1.0;
  k.name_ = "factorial";
  k.domain_min_ = 1.0;
  k.g_ = [](double t) { return t * std::log(t); };
  k.g_inverse_ = [](double s) { return std::exp(lambert_w0(s)); };
  return k;
}

ComplexityClass ComplexityClass::sub_factorial(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("sub-factorial class needs 0 < c < 1");
  ComplexityClass k;
  k.kind_ = Kind::kSubFactorial;
  k.c_ = c;
  k.name_ = "sub-factorial(c=" + format_c(c) + ")";
  k.domain_min_ = 1.0;
  k.g_ = [c](double t) { return c * t * std::log(t); };
  k.g_inverse_ = [c](double s) { return std::exp(lambert_w0(s / c)); };
  return k;
}

ComplexityClass ComplexityClass::custom(std::string name, Fn g, Fn g_inverse, double domain_min) {
  if (!g || !g_inverse) throw std::invalid_argument("custom class needs g and its inverse");
  if (!std::isfinite(domain_min)) throw std::invalid_argument("custom class needs a finite domain start");
  // 200 linear steps then a geometric tail up to domain_min + 1e4
  std::vector<double> grid;
  for (int k = 0; k <= 200; ++k) grid.push_back(domain_min + 0.25 * k);
  for (double span = 100.0; span <= 1e4; span *= 1.5) grid.push_back(domain_min + span);
  double prev = -std::numeric_limits<double>::infinity();
  for (double t : grid) {
    const double s = g(t);
    if (!std::isfinite(s) || !(s > prev)) {
      throw std::invalid_argument("custom g is not strictly increasing near t=" + format_c(t));
    }
    const double back = g_inverse(s);
    if (!(std::abs(back - t) <= 1e-10 * std::max(1.0, std::abs(t)))) {
      throw std::invalid_argument("custom g_inverse does not invert g near t=" + format_c(t));
    }
    prev = s;
  }
  ComplexityClass k;
  k.kind_ = Kind::kCustom;
  k.c_ = 0.0;
  k.name_ = std::move(name);
  k.domain_min_ = domain_min;
  k.g_ = std::move(g);
  k.g_inverse_ = std::move(g_inverse);
  return k;
}

double ComplexityClass::g(double t) const {
  if (!(t >= domain_min_)) throw std::domain_error(name_ + ": g needs t >= " + format_c(domain_min_));
  return g_(t);
}

double ComplexityClass::g_inverse(double s) const {
  const double lo = g_(domain_min_);
  if (!(s >= lo)) throw std::domain_error(name_ + ": g_inverse needs s >= " + format_c(lo));
  return g_inverse_(s);
}

double ComplexityClass::z_from_renyi(double R) const {
  switch (kind_) {
    case Kind::kExponential:
      if (!(R >= 0.0)) throw std::domain_error(name_ + ": negative entropy");
      return R / c_;
    case Kind::kFactorial:
    case Kind::kSubFactorial:
      if (!(R >= 0.0)) throw std::domain_error(name_ + ": negative entropy");
      return std::expm1(lambert_w0(R / c_));
    case Kind::kCustom:
      break;
  }
  return g_inverse(R) - g_inverse(0.0);
}

namespace {

// Renyi entropies of well-formed distributions can come out as -1e-17.
double clamp_entropy(double R) { return R < 0.0 && R > -1e-12 ? 0.0 : R; }

}  // namespace

double metric_perm_entropy(const Distribution& p, const ComplexityClass& cls, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("metric entropy needs alpha > 0");
  return cls.z_from_renyi(clamp_entropy(renyi(p, alpha)));
}

double metric_perm_entropy(const PatternDistribution& p, const ComplexityClass& cls, double alpha) {
  return metric_perm_entropy(p.to_distribution(), cls, alpha);
}

double topological_perm_entropy(std::uint64_t allowed_count, const ComplexityClass& cls) {
  if (allowed_count < 1) throw std::invalid_argument("allowed_count must be >= 1");
  return cls.z_from_renyi(std::log(static_cast<double>(allowed_count)));
}

double perm_entropy(const PatternDistribution& p, const ComplexityClass& cls, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
  if (alpha == 0.0) return topological_perm_entropy(p.allowed_count(), cls);
  return metric_perm_entropy(p, cls, alpha);
}

std::vector<RateEstimate> entropy_rates(const ProcessSpec& spec, const ComplexityClass& cls,
                                        std::span<const double> alphas, std::span<const int> L_values,
                                        int realizations) {
  if (L_values.empty()) throw std::invalid_argument("empty L list");
  if (alphas.empty()) throw std::invalid_argument("empty alpha list");
  if (realizations < 1) throw std::invalid_argument("need at least one realization");
  for (int L : L_values) check_pattern_length(L);
  for (double a : alphas) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("alpha must be finite and >= 0");
  }
  const int L_max = *std::max_element(L_values.begin(), L_values.end());
  if (spec.length < static_cast<std::size_t>(L_max)) throw std::invalid_argument("T must be >= max(L)");
  validate(spec);

  const auto R = static_cast<std::size_t>(realizations);
  const std::size_t nL = L_values.size();
  std::vector<TimeSeries> series(R);
  parallel_for(R, [&](std::size_t r) { series[r] = generate(with_seed_offset(spec, r)); });

  // z[(r * nL + l) * nA + a] = Z(L_l)/L_l at alpha_a in realization r
  const std::size_t nA = alphas.size();
  std::vector<double> z(R * nL * nA);
  parallel_for(R * nL, [&](std::size_t job) {
    const std::size_t r = job / nL;
    const std::size_t l = job % nL;
    const int L = L_values[l];
    const PatternDistribution d = census(series[r], L);
    for (std::size_t a = 0; a < nA; ++a) z[job * nA + a] = perm_entropy(d, cls, alphas[a]) / L;
  });

  std::vector<RateEstimate> out(nA);
  for (std::size_t a = 0; a < nA; ++a) {
    RateEstimate& e = out[a];
    e.alpha = alphas[a];
    e.L.assign(L_values.begin(), L_values.end());
    for (std::size_t l = 0; l < nL; ++l) {
      double mean = 0.0;
      for (std::size_t r = 0; r < R; ++r) mean += z[(r * nL + l) * nA + a];
      mean /= static_cast<double>(R);
      double ss = 0.0;
      for (std::size_t r = 0; r < R; ++r) {
        const double d = z[(r * nL + l) * nA + a] - mean;
        ss += d * d;
      }
      e.value.push_back(mean);
      e.stddev.push_back(R > 1 ? std::sqrt(ss / static_cast<double>(R - 1)) : 0.0);

      const int L = L_values[l];
      const std::size_t windows = spec.length - static_cast<std::size_t>(L) + 1;
      if (static_cast<double>(windows) < 10.0 * static_cast<double>(factorial(L))) {
        e.warnings.push_back("L=" + std::to_string(L) + ": " + std::to_string(windows) +
                             " windows is fewer than 10*L!; estimate is biased low");
      }
    }
    const auto last = std::max_element(L_values.begin(), L_values.end()) - L_values.begin();
    e.final_value = e.value[static_cast<std::size_t>(last)];
  }
  return out;
}

RateEstimate entropy_rate(const ProcessSpec& spec, const ComplexityClass& cls, double alpha,
                          std::span<const int> L_values, int realizations) {
  const double alphas[] = {alpha};
  return entropy_rates(spec, cls, alphas, L_values, realizations).front();
}

GrowthFit classify_growth(std::span<const int> L, std::span<const double> ln_allowed) {
  if (L.size() != ln_allowed.size()) throw std::invalid_argument("L and ln A_L lengths differ");
  if (std::set<int>(L.begin(), L.end()).size() < 3) {
    throw std::invalid_argument("growth classification needs at least 3 distinct L values");
  }
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (L[i] < 1) throw std::invalid_argument("L values must be positive");
    if (!std::isfinite(ln_allowed[i])) throw std::invalid_argument("ln A_L must be finite");
  }

  struct Model {
    const char* name;
    double (*x)(int);
  };
  static constexpr Model models[] = {
      {"c*L", [](int n) { return static_cast<double>(n); }},
      {"c*L*ln(L)", [](int n) { return n * std::log(static_cast<double>(n)); }},
      {"c*ln(L!)", [](int n) { return std::lgamma(n + 1.0); }},
  };

  GrowthFit fit;
  std::size_t best = 0;
  for (std::size_t m = 0; m < std::size(models); ++m) {
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) {
      const double x = models[m].x(L[i]);
      sxy += x * ln_allowed[i];
      sxx += x * x;
    }
    ModelFit mf{models[m].name, sxx > 0.0 ? sxy / sxx : 0.0, 0.0};
    for (std::size_t i = 0; i < L.size(); ++i) {
      const double r = ln_allowed[i] - mf.c * models[m].x(L[i]);
      mf.rss += r * r;
    }
    fit.fits.push_back(mf);
    if (mf.rss < fit.fits[best].rss) best = m;
  }

  fit.best_model = fit.fits[best].model;
  fit.c_hat = fit.fits[best].c;
  if (best == 0) {
    fit.kind = ComplexityClass::Kind::kExponential;
    if (fit.c_hat <= 0.0) fit.notes.push_back("non-positive growth coefficient: no growth detected");
  } else if (fit.c_hat >= 0.9) {
    fit.kind = ComplexityClass::Kind::kFactorial;
    if (fit.c_hat > 1.1) fit.notes.push_back("coefficient above 1.1 exceeds the factorial bound ln L!");
  } else {
    fit.kind = ComplexityClass::Kind::kSubFactorial;
    if (fit.c_hat <= 0.0) fit.notes.push_back("non-positive growth coefficient: no growth detected");
  }
  if (*std::max_element(L.begin(), L.end()) < 20) {
    fit.notes.push_back("small L: ln L! and L ln L differ by O(L), so the two logarithmic models give different c");
  }
  return fit;
}

GrowthFit classify_growth(std::span<const CensusCurve> curves) {
  std::vector<int> L;
  std::vector<double> y;
  for (const auto& c : curves) {
    if (c.g_mean.empty()) throw std::invalid_argument("empty census curve");
    L.push_back(c.length);
    y.push_back(c.g_mean.back());
  }
  return classify_growth(L, y);
}

std::string to_string(ComplexityClass::Kind kind) {
  switch (kind) {
    case ComplexityClass::Kind::kExponential: return "exponential";
    case ComplexityClass::Kind::kFactorial: return "factorial";
    case ComplexityClass::Kind::kSubFactorial: return "sub-factorial";
    case ComplexityClass::Kind::kCustom: return "custom";
  }
  return "unknown";
}

}  // namespace ordent
