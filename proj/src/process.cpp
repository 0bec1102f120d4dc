#include "ordent/process.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ordent {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

class FftwBuffer {
 public:
  explicit FftwBuffer(std::size_t n)
      : data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))), size_(n) {
    if (!data_) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data_); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  fftw_complex* get() noexcept { return data_; }
  std::size_t size() const noexcept { return size_; }
  double& re(std::size_t i) noexcept { return data_[i][0]; }
  double& im(std::size_t i) noexcept { return data_[i][1]; }

 private:
  fftw_complex* data_;
  std::size_t size_;
};

// In-place forward DFT, sum_k a_k exp(-2 pi i j k / n).
void forward_dft(FftwBuffer& buf) {
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(buf.size()), buf.get(), buf.get(), FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Eigenvalues of the 2m-circulant whose first row embeds gamma(0..m).
std::vector<double> circulant_eigenvalues(std::size_t m, double hurst) {
  const std::size_t M = 2 * m;
  FftwBuffer buf(M);
  for (std::size_t k = 0; k < M; ++k) {
    const std::size_t lag = k <= m ? k : M - k;
    buf.re(k) = fgn_autocovariance(hurst, lag);
    buf.im(k) = 0.0;
  }
  forward_dft(buf);
  std::vector<double> lambda(M);
  for (std::size_t k = 0; k < M; ++k) lambda[k] = buf.re(k);
  return lambda;
}

std::vector<double> fgn_durbin_levinson(std::size_t n, double hurst, RandomStream& rng) {
  std::vector<double> x(n);
  if (n == 0) return x;
  std::vector<double> gamma(n);
  for (std::size_t k = 0; k < n; ++k) gamma[k] = fgn_autocovariance(hurst, k);

  std::vector<double> phi(n, 0.0);
  std::vector<double> prev(n, 0.0);
  double v = gamma[0];
  x[0] = std::sqrt(v) * rng.gaussian();
  for (std::size_t t = 1; t < n; ++t) {
    double acc = gamma[t];
    for (std::size_t j = 1; j < t; ++j) acc -= prev[j] * gamma[t - j];
    const double reflection = acc / v;
    phi[t] = reflection;
    for (std::size_t j = 1; j < t; ++j) phi[j] = prev[j] - reflection * prev[t - j];
    v *= 1.0 - reflection * reflection;

    double mean = 0.0;
    for (std::size_t j = 1; j <= t; ++j) mean += phi[j] * x[t - j];
    x[t] = mean + std::sqrt(v) * rng.gaussian();
    std::copy(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(t) + 1, prev.begin());
  }
  return x;
}

std::vector<double> fgn_circulant(std::size_t n, double hurst, RandomStream& rng) {
  const std::size_t m = next_pow2(std::max<std::size_t>(n, 2));
  const std::size_t M = 2 * m;
  std::vector<double> lambda = circulant_eigenvalues(m, hurst);
  const double lmax = *std::max_element(lambda.begin(), lambda.end());
  const double lmin = *std::min_element(lambda.begin(), lambda.end());
  if (lmin < -1e-10 * lmax) return fgn_durbin_levinson(n, hurst, rng);

  FftwBuffer buf(M);
  for (std::size_t k = 0; k < M; ++k) {
    const double scale = std::sqrt(std::max(lambda[k], 0.0) / static_cast<double>(M));
    buf.re(k) = scale * rng.gaussian();
    buf.im(k) = scale * rng.gaussian();
  }
  forward_dft(buf);
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = buf.re(j);
  return x;
}

const double kCubicBound = 2.0 / std::sqrt(3.0);

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate_hurst(double h) {
  require(h > 0.0 && h < 1.0, "Hurst exponent must lie in (0,1), got " + std::to_string(h));
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double RandomStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  // 1 - u lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

double fgn_autocovariance(double hurst, std::size_t lag) {
  const double k = static_cast<double>(lag);
  const double h2 = 2.0 * hurst;
  return 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) + std::pow(std::abs(k - 1.0), h2));
}

double circulant_min_eigenvalue_ratio(std::size_t n, double hurst) {
  validate_hurst(hurst);
  const auto lambda = circulant_eigenvalues(next_pow2(std::max<std::size_t>(n, 2)), hurst);
  return *std::min_element(lambda.begin(), lambda.end()) /
         *std::max_element(lambda.begin(), lambda.end());
}

std::vector<double> generate_fgn(std::size_t n, double hurst, RandomStream& rng, FgnMethod method) {
  validate_hurst(hurst);
  return method == FgnMethod::kCirculant ? fgn_circulant(n, hurst, rng)
                                         : fgn_durbin_levinson(n, hurst, rng);
}

bool is_deterministic_map(const ProcessKind& kind) {
  return std::holds_alternative<Logistic>(kind) || std::holds_alternative<NoisyLogistic>(kind) ||
         std::holds_alternative<NoisyCubic>(kind) || std::holds_alternative<NoisySkewTent>(kind);
}

std::size_t effective_transient(const ProcessSpec& spec) {
  return spec.transient.value_or(is_deterministic_map(spec.kind) ? kDefaultMapTransient : 0);
}

void validate(const ProcessSpec& spec) {
  require(spec.length >= 2, "series length must be at least 2");
  std::visit(Overloaded{
                 [](const WhiteNoise&) {},
                 [](const FractionalGaussianNoise& p) { validate_hurst(p.hurst); },
                 [](const FractionalBrownianMotion& p) { validate_hurst(p.hurst); },
                 [](const Logistic& p) {
                   require(p.a > 0.0 && p.a <= 4.0, "logistic parameter a must lie in (0,4]");
                   require(p.x0 >= 0.0 && p.x0 <= 1.0, "logistic x0 must lie in [0,1]");
                 },
                 [](const NoisyLogistic& p) {
                   require(p.a > 0.0 && p.a <= 4.0, "logistic parameter a must lie in (0,4]");
                   require(p.eps >= 0.0 && std::isfinite(p.eps), "noise amplitude eps must be >= 0");
                   require(p.x0 >= 0.0 && p.x0 <= 1.0, "logistic x0 must lie in [0,1]");
                   if (p.a_sweep_max) {
                     require(*p.a_sweep_max >= p.a && *p.a_sweep_max <= 4.0,
                             "sweep upper bound must lie in [a, 4]");
                   }
                 },
                 [](const NoisyCubic& p) {
                   require(p.amplitude >= 0.0 && std::isfinite(p.amplitude), "noise amplitude must be >= 0");
                   require(std::abs(p.y0) <= kCubicBound, "cubic map y0 must lie in [-2/sqrt(3), 2/sqrt(3)]");
                 },
                 [](const NoisySkewTent& p) {
                   require(p.amplitude >= 0.0 && std::isfinite(p.amplitude), "noise amplitude must be >= 0");
                   require(p.y0 >= 0.0 && p.y0 <= 1.0, "skew tent y0 must lie in [0,1]");
                 },
             },
             spec.kind);
}

std::string describe(const ProcessKind& kind) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const WhiteNoise&) { out << "white-noise"; },
                 [&](const FractionalGaussianNoise& p) { out << "fgn(H=" << p.hurst << ")"; },
                 [&](const FractionalBrownianMotion& p) { out << "fbm(H=" << p.hurst << ")"; },
                 [&](const Logistic& p) { out << "logistic(a=" << p.a << ")"; },
                 [&](const NoisyLogistic& p) {
                   out << "noisy-logistic(a=" << p.a;
                   if (p.a_sweep_max) out << ".." << *p.a_sweep_max;
                   out << " eps=" << p.eps << ")";
                 },
                 [&](const NoisyCubic& p) { out << "noisy-cubic(amp=" << p.amplitude << ")"; },
                 [&](const NoisySkewTent& p) { out << "noisy-skew-tent(amp=" << p.amplitude << ")"; },
             },
             kind);
  return out.str();
}

ProcessSpec with_seed_offset(ProcessSpec spec, std::uint64_t offset) {
  spec.seed += offset;
  return spec;
}

TimeSeries generate(const ProcessSpec& spec) {
  validate(spec);
  const std::size_t T = spec.length;
  const std::size_t skip = effective_transient(spec);
  RandomStream rng(spec.seed);
  std::vector<double> x(T);

  // Runs `step` for the transient, then records T values of `observe`.
  auto run_map = [&](double& state, auto step, auto observe) {
    for (std::size_t i = 0; i < skip; ++i) state = step(state);
    for (std::size_t t = 0; t < T; ++t) {
      x[t] = observe(state);
      state = step(state);
    }
  };

  std::visit(
      Overloaded{
          [&](const WhiteNoise&) {
            for (double& v : x) v = rng.uniform();
          },
          [&](const FractionalGaussianNoise& p) { x = generate_fgn(T, p.hurst, rng); },
          [&](const FractionalBrownianMotion& p) {
            const auto increments = generate_fgn(T - 1, p.hurst, rng);
            x[0] = 0.0;
            for (std::size_t t = 1; t < T; ++t) x[t] = x[t - 1] + increments[t - 1];
          },
          [&](const Logistic& p) {
            double state = p.x0;
            const double a = p.a;
            run_map(state, [a](double s) { return a * s * (1.0 - s); }, [](double s) { return s; });
          },
          [&](const NoisyLogistic& p) {
            const double a = p.a_sweep_max ? rng.uniform(p.a, *p.a_sweep_max) : p.a;
            const double eps = p.eps;
            double state = p.x0;
            run_map(
                state,
                [&](double s) { return clamp_unit(a * s * (1.0 - s) + rng.uniform(-eps, eps)); },
                [](double s) { return s; });
          },
          [&](const NoisyCubic& p) {
            const double half = 0.5 * p.amplitude;
            double state = p.y0;
            // Roundoff near the critical point can leave the invariant
            // interval, after which orbits escape; clamp back into it.
            run_map(
                state,
                [](double y) { return std::clamp(3.0 * y * (1.0 - y * y), -kCubicBound, kCubicBound); },
                [&](double y) { return y + rng.uniform(-half, half); });
          },
          [&](const NoisySkewTent& p) {
            const double half = 0.5 * p.amplitude;
            double state = p.y0;
            run_map(
                state,
                [](double y) { return clamp_unit(y <= 0.25 ? y / 0.25 : (1.0 - y) / 0.75); },
                [&](double y) { return y + rng.uniform(-half, half); });
          },
      },
      spec.kind);

  return TimeSeries(std::move(x), describe(spec.kind), spec.seed);
}

}  // namespace ordent
