#pragma once

// Seeded generators for the reference processes: white noise, fractional
// Gaussian noise and Brownian motion, the logistic map (clean and with
// dynamical noise) and the cubic and skew tent maps with observational noise.
//
// Every generator draws from a std::mt19937_64 seeded with ProcessSpec::seed.
// Uniforms take the top 53 bits of each draw; Gaussians use the Box-Muller
// transform on pairs of uniforms. Both transforms are fixed here, so a
// (spec, seed) pair gives the same bits on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ordent/ordinal.hpp"

namespace ordent {

struct WhiteNoise {};

struct FractionalGaussianNoise {
  double hurst = 0.75;
};

struct FractionalBrownianMotion {
  double hurst = 0.5;
};

struct Logistic {
  double a = 4.0;
  double x0 = 0.3;
};

/// x_{t+1} = a x_t (1 - x_t) + eps_t, eps_t uniform on [-eps, eps], clamped
/// to [0,1]. With `a_sweep_max` set, each realization draws a uniformly from
/// [a, a_sweep_max].
struct NoisyLogistic {
  double a = 3.835;
  double eps = 0.001;
  double x0 = 0.5;
  std::optional<double> a_sweep_max;
};

/// y_t = 3 y_{t-1}(1 - y_{t-1}^2), x_t = y_t + z_t, z_t uniform with
/// |z_t| <= amplitude/2.
struct NoisyCubic {
  double amplitude = 0.15;
  double y0 = 0.1;
};

/// Skew tent map with peak at 0.25 plus observational noise |z_t| <= amplitude/2.
struct NoisySkewTent {
  double amplitude = 0.20;
  double y0 = 0.3;
};

using ProcessKind = std::variant<WhiteNoise, FractionalGaussianNoise, FractionalBrownianMotion,
                                 Logistic, NoisyLogistic, NoisyCubic, NoisySkewTent>;

/// Iterations discarded before recording for deterministic maps.
inline constexpr std::size_t kDefaultMapTransient = 1000;

struct ProcessSpec {
  ProcessKind kind = WhiteNoise{};
  std::size_t length = 1000;
  std::uint64_t seed = 0;
  /// Discarded prefix; unset means kDefaultMapTransient for maps, 0 otherwise.
  std::optional<std::size_t> transient;
};

/// Throws std::invalid_argument when a parameter is out of range.
void validate(const ProcessSpec& spec);

bool is_deterministic_map(const ProcessKind& kind);
std::size_t effective_transient(const ProcessSpec& spec);

/// Short label such as "fbm(H=0.2)".
std::string describe(const ProcessKind& kind);

TimeSeries generate(const ProcessSpec& spec);

/// The same spec with seed + offset, used for independent realizations.
ProcessSpec with_seed_offset(ProcessSpec spec, std::uint64_t offset);

// Building blocks, exposed for tests.

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// gamma(k) = (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}) / 2
double fgn_autocovariance(double hurst, std::size_t lag);

enum class FgnMethod { kCirculant, kDurbinLevinson };

/// n samples of unit-variance fGn. kCirculant embeds the covariance in a
/// circulant matrix of size 2m (m >= n a power of two) and falls back to
/// Durbin-Levinson when the embedding has a significantly negative eigenvalue.
std::vector<double> generate_fgn(std::size_t n, double hurst, RandomStream& rng,
                                 FgnMethod method = FgnMethod::kCirculant);

/// Smallest eigenvalue of the circulant embedding relative to the largest;
/// non-negative means the embedding is exact.
double circulant_min_eigenvalue_ratio(std::size_t n, double hurst);

}  // namespace ordent
