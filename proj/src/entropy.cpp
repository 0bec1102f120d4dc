#include "ordent/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace ordent {

namespace {

// Neumaier-compensated sum.
template <typename F>
double compensated_sum(std::span<const double> xs, F term) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : xs) {
    const double t = term(x);
    const double s = sum + t;
    c += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
    sum = s;
  }
  return sum + c;
}

bool near_one(double alpha) { return std::abs(alpha - 1.0) < kAlphaOneTolerance; }

void require_positive_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be positive and finite, got " + std::to_string(alpha));
  }
}

// sum p_i^alpha - 1, computed as sum p_i expm1((alpha-1) ln p_i) so that the
// result keeps full relative precision when alpha is close to 1.
double power_sum_minus_one(const Distribution& p, double alpha) {
  const double d = alpha - 1.0;
  return compensated_sum(p.probs(), [d](double x) {
    return x > 0.0 ? x * std::expm1(d * std::log(x)) : 0.0;
  });
}

// ln sum p_i^alpha. log1p keeps precision near alpha = 1; far from it the
// sum can be tiny and the direct logarithm is the accurate one.
double log_power_sum(const Distribution& p, double alpha) {
  const double m = power_sum_minus_one(p, alpha);
  if (std::abs(m) < 0.5) return std::log1p(m);
  return std::log(compensated_sum(p.probs(), [alpha](double x) { return x > 0.0 ? std::pow(x, alpha) : 0.0; }));
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("distribution must have at least one entry");
  for (double x : probs_) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw std::invalid_argument("probability outside [0,1]: " + std::to_string(x));
    }
  }
  const double total = compensated_sum(probs_, [](double x) { return x; });
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

Distribution Distribution::from_weights(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be finite and non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("weights sum to zero");
  std::vector<double> p(weights.begin(), weights.end());
  for (double& x : p) x /= total;
  return Distribution(std::move(p));
}

Distribution Distribution::uniform(std::size_t W) {
  if (W == 0) throw std::invalid_argument("uniform distribution needs W >= 1");
  return Distribution(std::vector<double>(W, 1.0 / static_cast<double>(W)));
}

Distribution product(const Distribution& p, const Distribution& q) {
  std::vector<double> pq;
  pq.reserve(p.size() * q.size());
  for (double a : p.probs()) {
    for (double b : q.probs()) pq.push_back(a * b);
  }
  return Distribution(std::move(pq));
}

double power_sum(const Distribution& p, double alpha) {
  require_positive_alpha(alpha);
  return compensated_sum(p.probs(), [alpha](double x) { return x > 0.0 ? std::pow(x, alpha) : 0.0; });
}

double shannon(const Distribution& p) {
  return compensated_sum(p.probs(), [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; });
}

double renyi(const Distribution& p, double alpha) {
  require_positive_alpha(alpha);
  if (near_one(alpha)) return shannon(p);
  return log_power_sum(p, alpha) / (1.0 - alpha);
}

double renyi_zero(const Distribution& p) {
  std::size_t support = 0;
  for (double x : p.probs()) support += x > 0.0;
  return std::log(static_cast<double>(support));
}

double tsallis(const Distribution& p, double alpha) {
  require_positive_alpha(alpha);
  if (near_one(alpha)) return shannon(p);
  return power_sum_minus_one(p, alpha) / (1.0 - alpha);
}

double two_param_entropy(const Distribution& p, double alpha, double beta) {
  require_positive_alpha(alpha);
  if (near_one(alpha)) throw std::invalid_argument("two_param_entropy: alpha must differ from 1");
  if (beta == 0.0 || !std::isfinite(beta)) throw std::invalid_argument("two_param_entropy: beta must be non-zero");
  const double log_sum = log_power_sum(p, alpha);
  return beta * std::expm1(log_sum / (beta * (1.0 - alpha)));
}

double z_ab_entropy(const Distribution& p, double alpha, double a, double b) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("z_ab_entropy: alpha must lie in (0,1)");
  if (a == b) throw std::invalid_argument("z_ab_entropy: a and b must differ");
  if (!(a > 0.0 || b > 0.0)) throw std::invalid_argument("z_ab_entropy: a > 0 or b > 0 required");
  const double log_sum = log_power_sum(p, alpha);
  return (std::expm1(a * log_sum) - std::expm1(b * log_sum)) / ((a - b) * (1.0 - alpha));
}

double q_log(double x, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q_log: q must be positive");
  if (!(x > 0.0)) throw std::domain_error("q_log: x must be positive, got " + std::to_string(x));
  if (near_one(q)) return std::log(x);
  return std::expm1((1.0 - q) * std::log(x)) / (1.0 - q);
}

double q_exp(double x, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q_exp: q must be positive");
  if (near_one(q)) return std::exp(x);
  const double base = (1.0 - q) * x;
  if (base <= -1.0) return q < 1.0 ? 0.0 : INFINITY;
  return std::exp(std::log1p(base) / (1.0 - q));
}

GroupLogarithm::GroupLogarithm(std::string name, Fn G, Fn G_inverse)
    : name_(std::move(name)), G_(std::move(G)), G_inverse_(std::move(G_inverse)) {
  if (!G_ || !G_inverse_) throw std::invalid_argument("group logarithm needs G and its inverse");
}

GroupLogarithm GroupLogarithm::natural() {
  return {"ln", [](double t) { return t; }, [](double s) { return s; }};
}

GroupLogarithm GroupLogarithm::q_logarithm(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q-logarithm: q must be positive");
  if (near_one(q)) return natural();
  const double k = 1.0 - q;
  return {"q-log(q=" + std::to_string(q) + ")",
          [k](double t) { return std::expm1(k * t) / k; },
          [k](double s) {
            if (k * s <= -1.0) throw std::domain_error("q-exponential: argument outside domain");
            return std::log1p(k * s) / k;
          }};
}

GroupLogarithm GroupLogarithm::from_growth(std::string name, Fn W_inverse, Fn W, double alpha) {
  require_positive_alpha(alpha);
  if (near_one(alpha)) throw std::invalid_argument("from_growth: alpha must differ from 1");
  const double k = 1.0 - alpha;
  const double w_inv_one = W_inverse(1.0);
  return {std::move(name),
          [W_inverse, k, w_inv_one](double t) { return k * (W_inverse(std::exp(t / k)) - w_inv_one); },
          [W, k, w_inv_one](double s) { return k * std::log(W(s / k + w_inv_one)); }};
}

double GroupLogarithm::log(double x) const {
  if (!(x > 0.0)) throw std::domain_error("group logarithm of a non-positive number");
  return G_(std::log(x));
}

double GroupLogarithm::exp(double y) const { return std::exp(G_inverse_(y)); }

double z_entropy_general(const Distribution& p, const GroupLogarithm& G, double alpha) {
  require_positive_alpha(alpha);
  if (near_one(alpha)) {
    throw std::invalid_argument("z_entropy_general: alpha = 1 is handled by the class-specific forms");
  }
  return G.G(log_power_sum(p, alpha)) / (1.0 - alpha);
}

double relative_z(const Distribution& p, const Distribution& q, const GroupLogarithm& G,
                  double alpha) {
  require_positive_alpha(alpha);
  if (near_one(alpha)) throw std::invalid_argument("relative_z: alpha must differ from 1");
  if (p.size() != q.size()) throw std::invalid_argument("relative_z: distributions differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0) || !(q[i] > 0.0)) {
      throw std::invalid_argument("relative_z: all entries of p and q must be positive");
    }
    sum += std::exp(alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]));
  }
  return G.G(std::log(sum) / (alpha - 1.0));
}

CompositionLaw CompositionLaw::additive() {
  return {"additive", [](double x, double y) { return x + y; }};
}

CompositionLaw CompositionLaw::multiplicative(double a) {
  return {"multiplicative", [a](double x, double y) { return x + y + a * x * y; }};
}

CompositionLaw CompositionLaw::hyperbolic() {
  return {"hyperbolic", [](double x, double y) { return (x + y) / (1.0 + x * y); }};
}

CompositionLaw CompositionLaw::euler() {
  return {"euler", [](double x, double y) {
            return (x * std::sqrt(1.0 - y * y * y * y) + y * std::sqrt(1.0 - x * x * x * x)) /
                   (1.0 + x * x * y * y);
          }};
}

}  // namespace ordent
