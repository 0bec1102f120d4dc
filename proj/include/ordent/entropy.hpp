#pragma once

// Generalized entropies of discrete distributions: Shannon, Renyi, Tsallis,
// the two-parameter Tsallis generalization, Z_{a,b}, and the generic
// Z-entropy (1/(1-alpha)) log_G(sum p_i^alpha) for a group logarithm
// log_G(x) = G(ln x).
//
// Conventions: 0 ln 0 = 0 and 0^alpha = 0, so zero-probability entries never
// change a value. Parameters within 1e-9 of alpha = 1 take the Shannon limit.

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ordent {

/// Validated probability vector: entries in [0,1] summing to 1 within 1e-12.
class Distribution {
 public:
  /// Throws std::invalid_argument on an empty vector, an entry outside [0,1]
  /// or a sum off by more than 1e-12.
  explicit Distribution(std::vector<double> probs);

  /// Normalizes non-negative weights (at least one positive).
  static Distribution from_weights(std::span<const double> weights);
  static Distribution uniform(std::size_t W);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// p x q with entries p_i q_j in row-major order.
Distribution product(const Distribution& p, const Distribution& q);

/// sum_i p_i^alpha over positive entries.
double power_sum(const Distribution& p, double alpha);

/// Alpha values closer than this to 1 are evaluated as the Shannon limit.
inline constexpr double kAlphaOneTolerance = 1e-9;

double shannon(const Distribution& p);

/// (1/(1-alpha)) ln sum p_i^alpha; alpha > 0.
double renyi(const Distribution& p, double alpha);

/// Renyi entropy of order 0: ln of the number of positive entries.
double renyi_zero(const Distribution& p);

/// (sum p_i^alpha - 1)/(1-alpha); alpha > 0.
double tsallis(const Distribution& p, double alpha);

/// beta((sum p_i^alpha)^{1/(beta(1-alpha))} - 1); alpha > 0, alpha != 1,
/// beta != 0. Equals tsallis at beta = 1/(1-alpha).
double two_param_entropy(const Distribution& p, double alpha, double beta);

/// [(sum p^alpha)^a - (sum p^alpha)^b] / ((a-b)(1-alpha)) with 0 < alpha < 1,
/// a != b and a > 0 or b > 0. b = 0 gives the Sharma-Mittal entropy.
double z_ab_entropy(const Distribution& p, double alpha, double a, double b);

/// q-logarithm (x^{1-q} - 1)/(1-q), x > 0, q > 0; ln x at q = 1.
double q_log(double x, double q);

/// q-exponential [1 + (1-q) x]_+^{1/(1-q)}, q > 0; exp x at q = 1.
double q_exp(double x, double q);

/// A group logarithm log_G(x) = G(ln x) and its exponential
/// exp_G(y) = exp(G^{-1}(y)). G must be strictly increasing with G(0) = 0.
class GroupLogarithm {
 public:
  using Fn = std::function<double(double)>;

  GroupLogarithm(std::string name, Fn G, Fn G_inverse);

  /// G(t) = t: the natural logarithm.
  static GroupLogarithm natural();
  /// G(t) = (e^{(1-q)t} - 1)/(1-q): the q-logarithm.
  static GroupLogarithm q_logarithm(double q);
  /// G(t) = (1-alpha)(W^{-1}(e^{t/(1-alpha)}) - W^{-1}(1)) for a state-space
  /// growth function W, without the lambda normalization.
  static GroupLogarithm from_growth(std::string name, Fn W_inverse, Fn W, double alpha);

  const std::string& name() const noexcept { return name_; }
  double G(double t) const { return G_(t); }
  double G_inverse(double s) const { return G_inverse_(s); }
  /// G(ln x); x > 0.
  double log(double x) const;
  double exp(double y) const;

 private:
  std::string name_;
  Fn G_;
  Fn G_inverse_;
};

/// (1/(1-alpha)) G(ln sum p_i^alpha). Throws std::invalid_argument at
/// alpha <= 0 or alpha = 1.
double z_entropy_general(const Distribution& p, const GroupLogarithm& G, double alpha);

/// log_G[(sum p_i^alpha q_i^{1-alpha})^{1/(alpha-1)}]. Requires equal lengths,
/// strictly positive entries, alpha > 0 and alpha != 1. With G = identity this
/// is the Renyi divergence of order alpha; it is non-negative for every
/// increasing G with G(0) = 0.
double relative_z(const Distribution& p, const Distribution& q, const GroupLogarithm& G,
                  double alpha);

/// A composition law Phi(x, y) for entropies of product distributions.
class CompositionLaw {
 public:
  using Fn = std::function<double(double, double)>;

  CompositionLaw(std::string name, Fn phi) : name_(std::move(name)), phi_(std::move(phi)) {}

  /// x + y
  static CompositionLaw additive();
  /// x + y + a x y
  static CompositionLaw multiplicative(double a);
  /// (x + y) / (1 + x y)
  static CompositionLaw hyperbolic();
  /// (x sqrt(1-y^4) + y sqrt(1-x^4)) / (1 + x^2 y^2), for |x|, |y| <= 1
  static CompositionLaw euler();

  const std::string& name() const noexcept { return name_; }
  double operator()(double x, double y) const { return phi_(x, y); }

 private:
  std::string name_;
  Fn phi_;
};

}  // namespace ordent
