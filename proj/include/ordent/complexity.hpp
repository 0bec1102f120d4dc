#pragma once

// Permutation-complexity classes g (growth of ln #allowed L-patterns with L),
// the entropies tailored to them, Z = g^{-1}(R_alpha) - g^{-1}(0), entropy
// rate estimates Z(L)/L, and a least-squares classifier for growth data.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ordent/census.hpp"
#include "ordent/entropy.hpp"
#include "ordent/process.hpp"

namespace ordent {

class ComplexityClass {
 public:
  enum class Kind { kExponential, kFactorial, kSubFactorial, kCustom };
  using Fn = std::function<double(double)>;

  /// g(t) = c t, c > 0, on t >= 0.
  static ComplexityClass exponential(double c = 1.0);
  /// g(t) = t ln t on t >= 1; g^{-1}(s) = e^{W(s)}.
  static ComplexityClass factorial();
  /// g(t) = c t ln t on t >= 1 with 0 < c < 1.
  static ComplexityClass sub_factorial(double c);
  /// Arbitrary g on [domain_min, inf). Throws std::invalid_argument unless g
  /// is strictly increasing and g_inverse(g(t)) = t (within 1e-10 relative) on
  /// a test grid.
  static ComplexityClass custom(std::string name, Fn g, Fn g_inverse, double domain_min = 0.0);

  Kind kind() const noexcept { return kind_; }
  /// c for exponential and sub-factorial classes, 1 for factorial, 0 for custom.
  double c() const noexcept { return c_; }
  const std::string& name() const noexcept { return name_; }
  double domain_min() const noexcept { return domain_min_; }

  /// Throws std::domain_error for t < domain_min().
  double g(double t) const;
  /// Throws std::domain_error for s < g(domain_min()).
  double g_inverse(double s) const;
  double inverse_at_zero() const { return g_inverse(0.0); }

  /// g^{-1}(R) - g^{-1}(0), evaluated without cancellation for the built-in
  /// classes (e^{W(R/c)} - 1 via expm1).
  double z_from_renyi(double R) const;

 private:
  ComplexityClass() = default;

  Kind kind_ = Kind::kExponential;
  double c_ = 1.0;
  std::string name_;
  double domain_min_ = 0.0;
  Fn g_;
  Fn g_inverse_;
};

/// Z_{g,alpha}(p) = g^{-1}(R_alpha(p)) - g^{-1}(0). Throws
/// std::invalid_argument for alpha <= 0.
double metric_perm_entropy(const Distribution& p, const ComplexityClass& cls, double alpha);
double metric_perm_entropy(const PatternDistribution& p, const ComplexityClass& cls, double alpha);

/// g^{-1}(ln allowed_count) - g^{-1}(0). Throws std::invalid_argument when
/// allowed_count < 1.
double topological_perm_entropy(std::uint64_t allowed_count, const ComplexityClass& cls);

/// alpha = 0 is the topological entropy of the observed patterns, alpha > 0
/// the metric one.
double perm_entropy(const PatternDistribution& p, const ComplexityClass& cls, double alpha);

struct RateEstimate {
  double alpha = 0.0;
  std::vector<int> L;
  /// Mean over realizations of Z(L)/L.
  std::vector<double> value;
  /// Sample standard deviation over realizations (0 for one realization).
  std::vector<double> stddev;
  /// Value at the largest L. This is a finite-L number, not a limit.
  double final_value = 0.0;
  /// One note per L with fewer than 10 L! windows.
  std::vector<std::string> warnings;
};

/// Z(L)/L for each L in L_values and each alpha, averaged over realizations
/// with seeds spec.seed + r and series of spec.length samples. All alphas of
/// one realization share the same census, so their ordering is exact.
/// Throws std::invalid_argument for an empty L list, an unsupported L,
/// alpha < 0, realizations < 1 or spec.length < max(L).
std::vector<RateEstimate> entropy_rates(const ProcessSpec& spec, const ComplexityClass& cls,
                                        std::span<const double> alphas, std::span<const int> L_values,
                                        int realizations);

RateEstimate entropy_rate(const ProcessSpec& spec, const ComplexityClass& cls, double alpha,
                          std::span<const int> L_values, int realizations);

struct ModelFit {
  std::string model;  // "c*L", "c*L*ln(L)", "c*ln(L!)"
  double c = 0.0;
  double rss = 0.0;
};

struct GrowthFit {
  ComplexityClass::Kind kind = ComplexityClass::Kind::kExponential;
  /// Coefficient of the winning model.
  double c_hat = 0.0;
  std::string best_model;
  /// Every model, in the order listed in ModelFit::model.
  std::vector<ModelFit> fits;
  std::vector<std::string> notes;
};

/// Least squares through the origin of ln A_L against c L, c L ln L and
/// c ln L!; the smallest residual sum of squares wins. A linear winner is
/// exponential; a logarithmic winner is factorial for c in [0.9, 1.1] and
/// sub-factorial for c in (0, 0.9). Throws std::invalid_argument for fewer
/// than 3 distinct L values or mismatched lengths.
GrowthFit classify_growth(std::span<const int> L, std::span<const double> ln_allowed);

/// Uses the last g_mean of each curve as ln A_L.
GrowthFit classify_growth(std::span<const CensusCurve> curves);

std::string to_string(ComplexityClass::Kind kind);

}  // namespace ordent
