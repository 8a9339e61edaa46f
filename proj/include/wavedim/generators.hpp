#pragma once

// Seeded reference signals: Gaussian white noise (Box-Muller), random walks,
// uniform decimal digits, the one-sided triadic Koch curve, sampled sines,
// Lorenz trajectories and Mandelbrot escape-time grids.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavedim/core.hpp"
#include "wavedim/error.hpp"

namespace wavedim {

struct RngSeed {
  std::uint64_t value = 0;
};

/// The library's only random source: a 64-bit Mersenne twister (its output
/// sequence is fixed by the C++ standard) with hand-rolled conversions, so a
/// seed yields the same stream with any standard library.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_positive() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  /// Unbiased integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorCode::InvalidArgument, "Rng::below needs a positive bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % bound;
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; spreads (master, stream) pairs into independent seeds.
inline RngSeed derive_seed(RngSeed master, std::string_view stream, std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = master.value ^ h;
  z += 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return RngSeed{z ^ (z >> 31)};
}

/// n draws from G(mean, variance) via the Box-Muller transform, consuming two
/// uniforms per pair of outputs.
inline std::vector<double> gaussian_white(std::size_t n, double mean, double variance, RngSeed seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gaussian_white needs n >= 1");
  if (!(variance >= 0.0)) throw Error(ErrorCode::InvalidArgument, "variance must be >= 0");
  Rng rng(seed);
  const double scale = std::sqrt(variance);
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const double radius = std::sqrt(-2.0 * std::log(rng.uniform_positive()));
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    out.push_back(mean + scale * radius * std::cos(angle));
    if (out.size() < n) out.push_back(mean + scale * radius * std::sin(angle));
  }
  return out;
}

/// b[0] = 0, b[i] = b[i-1] + g[i-1]: the walk driven by the same draws as the
/// white series, lagged by one sample.
inline std::vector<double> brownian_walk(std::span<const double> noise) {
  if (noise.empty()) throw Error(ErrorCode::InvalidArgument, "brownian_walk needs at least one value");
  std::vector<double> out(noise.size(), 0.0);
  for (std::size_t i = 1; i < noise.size(); ++i) out[i] = out[i - 1] + noise[i - 1];
  return out;
}

/// Decimal digits i.i.d. uniform on {0..9}.
inline std::vector<int> uniform_digits(std::size_t n, RngSeed seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "uniform_digits needs n >= 1");
  Rng rng(seed);
  std::vector<int> out(n);
  for (auto& d : out) d = static_cast<int>(rng.below(10));
  return out;
}

/// Fisher-Yates with the library RNG (std::shuffle's order is unspecified).
template <class T>
void shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
}

inline constexpr int kKochMaxStage = 10;

/// One side of the triadic Koch curve on [0, 1] with bumps toward +y:
/// 4^S segments of length 3^-S. Vertices are placed on the triangular
/// lattice from integer coordinates, so no error accumulates along the curve.
inline Waveform koch_curve(int stage) {
  if (stage < 0) throw Error(ErrorCode::InvalidArgument, "Koch stage must be >= 0");
  if (stage > kKochMaxStage) {
    throw Error(ErrorCode::StageTooLarge, "koch_curve supports stages 0.." + std::to_string(kKochMaxStage));
  }
  // Unit steps in lattice coordinates (a, b) -> a + b/2, b*sqrt(3)/2 for
  // directions 0, 60, ..., 300 degrees.
  static constexpr std::array<std::array<std::int64_t, 2>, 6> kSteps = {
      {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
  static constexpr std::array<int, 4> kTurn = {0, 1, -1, 0};

  const std::size_t segments = std::size_t{1} << (2 * stage);
  const double step = std::pow(3.0, -stage);
  const double half_root3 = std::sqrt(3.0) / 2.0;
  std::vector<double> xs(segments + 1);
  std::vector<double> ys(segments + 1);
  std::int64_t a = 0;
  std::int64_t b = 0;
  xs[0] = ys[0] = 0.0;
  for (std::size_t j = 0; j < segments; ++j) {
    int dir = 0;
    for (std::size_t rest = j, level = 0; level < static_cast<std::size_t>(stage); ++level, rest /= 4) {
      dir += kTurn[rest % 4];
    }
    dir = ((dir % 6) + 6) % 6;
    a += kSteps[static_cast<std::size_t>(dir)][0];
    b += kSteps[static_cast<std::size_t>(dir)][1];
    xs[j + 1] = step * (static_cast<double>(a) + 0.5 * static_cast<double>(b));
    ys[j + 1] = step * half_root3 * static_cast<double>(b);
  }
  return Waveform::curve(std::move(xs), std::move(ys));
}

/// y_i = sin(2 pi i / period) on the abscissa 0..n-1.
inline Waveform sine_wave(std::size_t n, double period) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sine_wave needs n >= 2");
  if (!(period > 0.0)) throw Error(ErrorCode::InvalidArgument, "period must be > 0");
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = static_cast<double>(i);
    ys[i] = std::sin(2.0 * std::numbers::pi * static_cast<double>(i) / period);
  }
  return Waveform(std::move(xs), std::move(ys));
}

// ---------------------------------------------------------------------------
// Lorenz
// ---------------------------------------------------------------------------

enum class LorenzIntegrator {
  RungeKutta4,
  ExplicitMap,  // one explicit Euler step per sample; for fidelity experiments
};

struct LorenzParams {
  double sigma = 3.0;
  double rho = 26.5;
  double beta = 1.0;
  double x0 = -1.0;
  double y0 = 0.0;
  double z0 = 1.0;
  double dt = 0.01;
  std::size_t steps = 40000;
  LorenzIntegrator integrator = LorenzIntegrator::RungeKutta4;
};

using LorenzState = std::array<double, 3>;

inline constexpr double kLorenzBlowupLimit = 1e6;

inline LorenzState lorenz_rhs(const LorenzParams& p, const LorenzState& s) noexcept {
  return {p.sigma * (s[1] - s[0]), p.rho * s[0] - s[0] * s[2] - s[1], s[0] * s[1] - p.beta * s[2]};
}

/// `steps` states following the initial one.
inline std::vector<LorenzState> lorenz_trajectory(const LorenzParams& p) {
  if (!(p.dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "Lorenz dt must be > 0");
  if (p.steps < 1) throw Error(ErrorCode::InvalidArgument, "Lorenz steps must be >= 1");

  auto axpy = [](const LorenzState& s, double h, const LorenzState& k) {
    return LorenzState{s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2]};
  };

  std::vector<LorenzState> out;
  out.reserve(p.steps);
  LorenzState s{p.x0, p.y0, p.z0};
  const double h = p.dt;
  for (std::size_t t = 0; t < p.steps; ++t) {
    if (p.integrator == LorenzIntegrator::RungeKutta4) {
      const LorenzState k1 = lorenz_rhs(p, s);
      const LorenzState k2 = lorenz_rhs(p, axpy(s, h / 2.0, k1));
      const LorenzState k3 = lorenz_rhs(p, axpy(s, h / 2.0, k2));
      const LorenzState k4 = lorenz_rhs(p, axpy(s, h, k3));
      for (std::size_t i = 0; i < 3; ++i) s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    } else {
      s = axpy(s, h, lorenz_rhs(p, s));
    }
    for (double v : s) {
      if (!std::isfinite(v) || std::abs(v) > kLorenzBlowupLimit) {
        throw Error(ErrorCode::NumericalBlowup, "Lorenz state exceeded 1e6 at step " + std::to_string(t + 1) +
                                                    " (reduce dt)");
      }
    }
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mandelbrot
// ---------------------------------------------------------------------------

struct MandelbrotWindow {
  double x_min = -3.0;
  double x_max = 3.0;
  double y_min = -2.0;
  double y_max = 2.0;
  std::size_t width = 600;
  std::size_t height = 400;
  int max_iter = 1024;
  double escape_radius = 2.0;
};

/// Iterations of Z <- Z^2 + C from Z = 0 until |Z| > radius; max_iter means
/// the point never escaped.
inline int escape_count(double c_re, double c_im, int max_iter, double escape_radius = 2.0) noexcept {
  const double limit = escape_radius * escape_radius;
  double z_re = 0.0;
  double z_im = 0.0;
  for (int n = 1; n <= max_iter; ++n) {
    const double re = z_re * z_re - z_im * z_im + c_re;
    const double im = 2.0 * z_re * z_im + c_im;
    z_re = re;
    z_im = im;
    if (z_re * z_re + z_im * z_im > limit) return n;
  }
  return max_iter;
}

struct MandelbrotGrid {
  std::size_t width = 0;
  std::size_t height = 0;
  int max_iter = 0;
  std::vector<int> counts;  // row-major, row 0 at y_max

  int at(std::size_t col, std::size_t row) const { return counts[row * width + col]; }
};

/// Escape counts at pixel centers. Pixel offsets from the window center are
/// formed as (2i + 1 - W) / (2W) so mirrored pixels get exactly negated
/// coordinates.
inline MandelbrotGrid mandelbrot_grid(const MandelbrotWindow& w) {
  if (!(w.x_min < w.x_max) || !(w.y_min < w.y_max)) throw Error(ErrorCode::InvalidArgument, "empty Mandelbrot window");
  if (w.width < 1 || w.height < 1) throw Error(ErrorCode::InvalidArgument, "Mandelbrot grid needs at least one pixel");
  if (w.max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 1");
  if (!(w.escape_radius >= 2.0)) throw Error(ErrorCode::InvalidArgument, "escape_radius must be >= 2");

  const double cx = (w.x_min + w.x_max) / 2.0;
  const double cy = (w.y_min + w.y_max) / 2.0;
  const double span_x = w.x_max - w.x_min;
  const double span_y = w.y_max - w.y_min;
  const auto wd = static_cast<double>(w.width);
  const auto ht = static_cast<double>(w.height);

  MandelbrotGrid grid;
  grid.width = w.width;
  grid.height = w.height;
  grid.max_iter = w.max_iter;
  grid.counts.resize(w.width * w.height);
  for (std::size_t row = 0; row < w.height; ++row) {
    const double offset_y = (2.0 * static_cast<double>(row) + 1.0 - ht) / (2.0 * ht);
    const double c_im = cy - offset_y * span_y;
    for (std::size_t col = 0; col < w.width; ++col) {
      const double offset_x = (2.0 * static_cast<double>(col) + 1.0 - wd) / (2.0 * wd);
      const double c_re = cx + offset_x * span_x;
      grid.counts[row * w.width + col] = escape_count(c_re, c_im, w.max_iter, w.escape_radius);
    }
  }
  return grid;
}

}  // namespace wavedim
