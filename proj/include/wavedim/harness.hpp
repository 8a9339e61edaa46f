#pragma once

// Monte Carlo validation experiments. Each returns a report of named
// statistics checked against fixed bands; everything is driven by one master
// seed, so a rerun reproduces every number.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wavedim/analysis.hpp"
#include "wavedim/core.hpp"
#include "wavedim/error.hpp"
#include "wavedim/estimators.hpp"
#include "wavedim/generators.hpp"
#include "wavedim/io.hpp"

namespace wavedim::harness {

inline constexpr std::uint64_t kDefaultSeed = 20180413;

struct Check {
  std::string statistic;
  double value = 0.0;
  double low = 0.0;
  double high = 0.0;
  bool pass = false;
  bool informational = false;  // reported, never fails the experiment
};

struct ExperimentReport {
  std::string name;
  std::size_t trials = 0;
  std::vector<Check> checks;
  double runtime_seconds = 0.0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.informational || c.pass; });
  }

  const Check* find(std::string_view statistic) const {
    for (const auto& c : checks) {
      if (c.statistic == statistic) return &c;
    }
    return nullptr;
  }

  void band(std::string statistic, double value, double low, double high) {
    checks.push_back({std::move(statistic), value, low, high, value >= low && value <= high, false});
  }

  /// A yes/no property, recorded as 1 or 0 against the band [1, 1].
  void holds(std::string statistic, bool ok) {
    checks.push_back({std::move(statistic), ok ? 1.0 : 0.0, 1.0, 1.0, ok, false});
  }

  void note(std::string statistic, double value, double low = -INFINITY, double high = INFINITY) {
    checks.push_back({std::move(statistic), value, low, high, value >= low && value <= high, true});
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline double mean(std::span<const double> v) {
  CompensatedSum s;
  for (double x : v) s.add(x);
  return s.value() / static_cast<double>(v.size());
}

inline bool strictly_increasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

inline bool strictly_decreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

inline std::string label(const char* prefix, std::size_t n) { return std::string(prefix) + std::to_string(n); }

inline std::vector<double> uniform_noise(std::size_t n, RngSeed seed) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = rng.uniform();
  return out;
}

/// y_i = sum_{j <= burn_in + i} z_j, i = 1..n, z standard normal.
inline std::vector<double> burned_in_walk(std::size_t n, std::size_t burn_in, RngSeed seed) {
  const auto z = gaussian_white(n + burn_in, 0.0, 1.0, seed);
  std::vector<double> out(n);
  double acc = 0.0;
  for (std::size_t j = 0; j < burn_in; ++j) acc += z[j];
  for (std::size_t i = 0; i < n; ++i) {
    acc += z[burn_in + i];
    out[i] = acc;
  }
  return out;
}

inline std::vector<double> to_doubles(std::span<const int> digits) { return {digits.begin(), digits.end()}; }

}  // namespace detail

// ---------------------------------------------------------------------------

struct WhiteBrownConfig {
  std::size_t trials = 30;
  std::size_t n = 10'000;
  std::vector<std::size_t> trend_sizes = {1'000, 10'000, 100'000, 1'000'000};
  std::size_t trend_trials = 10;
};

/// Mean D_S of Gaussian white noise and of its running sum, plus the trend of
/// the white-noise mean with length.
inline ExperimentReport run_white_brown_ds(const WhiteBrownConfig& cfg, RngSeed seed) {
  if (cfg.trials < 10) throw Error(ErrorCode::InvalidArgument, "white/brown experiment needs >= 10 trials");
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "white_brown_ds";
  r.trials = cfg.trials;

  std::vector<double> white, brown, white_cover, brown_cover;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto g = gaussian_white(cfg.n, 0.0, 1.0, derive_seed(seed, "white", t));
    const auto b = brownian_walk(gaussian_white(cfg.n, 0.0, 1.0, derive_seed(seed, "brown", t)));
    white.push_back(sevcik_dimension(g).value);
    brown.push_back(sevcik_dimension(b).value);
    white_cover.push_back(sevcik_dimension(g, SevcikForm::CoverConstant).value);
    brown_cover.push_back(sevcik_dimension(b, SevcikForm::CoverConstant).value);
  }
  r.band("mean_ds_white", detail::mean(white), 1.63, 1.69);
  r.band("mean_ds_brown", detail::mean(brown), 1.29, 1.36);

  std::vector<double> white_trend, brown_trend;
  for (std::size_t n : cfg.trend_sizes) {
    std::vector<double> w, b;
    for (std::size_t t = 0; t < cfg.trend_trials; ++t) {
      w.push_back(sevcik_dimension(gaussian_white(n, 0.0, 1.0, derive_seed(seed, "white-trend", n * 1000 + t))).value);
      b.push_back(sevcik_dimension(brownian_walk(gaussian_white(n, 0.0, 1.0, derive_seed(seed, "brown-trend", n * 1000 + t))))
                      .value);
    }
    white_trend.push_back(detail::mean(w));
    brown_trend.push_back(detail::mean(b));
    r.note(detail::label("mean_ds_white_n", n), white_trend.back(), 1.0, 2.0);
    r.note(detail::label("mean_ds_brown_n", n), brown_trend.back(), 1.0, 2.0);
  }
  r.holds("white_trend_increasing", detail::strictly_increasing(white_trend));
  r.note("brown_trend_increasing", detail::strictly_increasing(brown_trend) ? 1.0 : 0.0, 1.0, 1.0);

  // ln(L/2) variant of the estimator, shown for comparison only.
  r.note("mean_ds_white_cover_constant", detail::mean(white_cover), 1.63, 1.69);
  r.note("mean_ds_brown_cover_constant", detail::mean(brown_cover), 1.29, 1.36);

  bool flat_rejected = false;
  try {
    sevcik_dimension(gaussian_white(cfg.n, 0.0, 0.0, derive_seed(seed, "flat")));
  } catch (const Error& e) {
    flat_rejected = e.code() == ErrorCode::FlatSignal;
  }
  r.holds("zero_variance_rejected", flat_rejected);

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

struct KatzConfig {
  std::vector<std::size_t> sizes = {100, 1'000, 10'000, 100'000};
  std::size_t trials = 5;
  std::size_t profile_length = 10'000;
  std::size_t settle_after = 50;
};

/// D_K drifts towards 1 as the sample count grows, whatever the curve.
inline ExperimentReport run_katz_refutation(const KatzConfig& cfg, RngSeed seed) {
  if (cfg.sizes.size() < 3) throw Error(ErrorCode::InvalidArgument, "Katz experiment needs >= 3 sizes");
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "katz_refutation";
  r.trials = cfg.trials;

  std::vector<double> means;
  bool line_exact = true;
  for (std::size_t n : cfg.sizes) {
    std::vector<double> d;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      d.push_back(katz_dimension(Waveform::from_series(detail::uniform_noise(n, derive_seed(seed, "katz", n * 1000 + t))))
                      .value);
    }
    means.push_back(detail::mean(d));
    r.note(detail::label("mean_dk_uniform_n", n), means.back(), 1.0, 2.0);

    std::vector<double> line(n);
    for (std::size_t i = 0; i < n; ++i) line[i] = static_cast<double>(i);
    const double dk_line = katz_dimension(Waveform::from_series(line)).value;
    line_exact = line_exact && dk_line == 1.0;
  }
  r.holds("dk_decreasing", detail::strictly_decreasing(means));
  r.holds("dk_line_exactly_one", line_exact);

  const auto ratios =
      katz_extent_ratio_profile(Waveform::from_series(detail::uniform_noise(cfg.profile_length, derive_seed(seed, "katz-profile"))));
  const double final_ratio = ratios.back();
  double worst = 0.0;
  // Entry i covers i + 2 points.
  for (std::size_t i = cfg.settle_after >= 2 ? cfg.settle_after - 2 : 0; i < ratios.size(); ++i) {
    worst = std::max(worst, std::abs(ratios[i] - final_ratio) / final_ratio);
  }
  r.band("d_over_l_relative_fluctuation", worst, 0.0, 0.05);

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

inline constexpr double kKochDimension = 1.26185950714;  // ln 4 / ln 3

/// Closed-form D_S on Koch stages 0..max_stage and the point-set estimate on
/// the generated curve.
inline ExperimentReport run_koch_convergence(int max_stage) {
  if (max_stage < 1 || max_stage > kKochMaxStage) throw Error(ErrorCode::InvalidArgument, "max_stage must be in 1..10");
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "koch_convergence";
  r.trials = 1;

  std::vector<double> errors;
  for (int s = 0; s <= max_stage; ++s) {
    const double d = sevcik_on_koch(s).value;
    errors.push_back(std::abs(d - kKochDimension));
    r.note("closed_form_ds_stage_" + std::to_string(s), d, 1.0, 2.0);
  }
  const double closed = sevcik_on_koch(max_stage).value;
  r.band("closed_form_error_at_max_stage", errors.back(), 0.0, 0.02);
  r.holds("closed_form_error_decreasing", detail::strictly_decreasing(errors));

  const double generated = sevcik_dimension(koch_curve(max_stage)).value;
  r.band("point_set_ds", generated, kKochDimension - 0.02, kKochDimension + 0.02);
  r.band("point_set_minus_closed_form", std::abs(generated - closed), 0.0, 0.01);

  const double ternary = sevcik_on_koch(max_stage, KochClosedForm::TernaryGrid).value;
  r.note("ternary_grid_closed_form_ds", ternary, kKochDimension - 0.02, kKochDimension + 0.02);

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

struct DigitConfig {
  std::size_t n = 1'000'000;
  double alpha = 0.05;
  std::optional<std::string> digits_file;  // decimal digits; other characters ignored
  bool full_scale = false;                 // adds the streamed 10^9-digit run
  std::size_t full_scale_n = 1'000'000'000;
};

inline constexpr double kFullScaleDigitsTarget = 1.88743881;

/// Reads every decimal digit character in a file, in order.
inline std::vector<int> read_digits_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open");
  std::vector<int> digits;
  char c = 0;
  while (in.get(c)) {
    if (c >= '0' && c <= '9') digits.push_back(c - '0');
  }
  if (digits.size() < 3) throw Error(ErrorCode::Parse, path + ": fewer than 3 digits");
  return digits;
}

/// D_S of a digit sequence is unchanged, within the Vysochanskij-Petunin
/// bound, by shuffling the same digits.
inline ExperimentReport run_digit_comparison(const DigitConfig& cfg, RngSeed seed) {
  if (cfg.n < 100'000) throw Error(ErrorCode::InvalidArgument, "digit experiment needs n >= 1e5");
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "digit_comparison";
  r.trials = 1;

  auto compare = [&](const std::vector<int>& digits, const std::string& prefix, std::string_view stream) {
    auto values = detail::to_doubles(digits);
    const auto original = sevcik_dimension(values);
    Rng rng(derive_seed(seed, stream));
    shuffle(std::span<double>(values), rng);
    const auto shuffled = sevcik_dimension(values);
    const auto cmp = vp_compare(original, shuffled, cfg.alpha);
    r.note(prefix + "ds_original", original.value, 1.0, 2.0);
    r.note(prefix + "ds_shuffled", shuffled.value, 1.0, 2.0);
    r.note(prefix + "vp_lambda", cmp.lambda);
    r.band(prefix + "vp_p_bound", cmp.p_bound, cfg.alpha, 1.0);
  };

  compare(uniform_digits(cfg.n, derive_seed(seed, "digits")), "", "digits-shuffle");

  const auto same = sevcik_dimension(detail::to_doubles(uniform_digits(1000, derive_seed(seed, "digits-identity"))));
  r.band("identical_input_lambda", vp_compare(same, same, cfg.alpha).lambda, 0.0, 0.0);

  if (cfg.digits_file) compare(read_digits_file(*cfg.digits_file), "file_", "file-shuffle");

  if (cfg.full_scale) {
    const RngSeed full_seed = derive_seed(seed, "digits-full");
    const auto est = sevcik_dimension_streaming(cfg.full_scale_n, [full_seed] {
      return [rng = Rng(full_seed)]() mutable { return static_cast<double>(rng.below(10)); };
    });
    r.band("full_scale_ds", est.value, kFullScaleDigitsTarget - 0.001, kFullScaleDigitsTarget + 0.001);
  }

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

struct SpectralConfig {
  std::size_t n = 1u << 14;
  std::size_t trials = 20;
  std::size_t sine_n = 8192;
  double sine_period = 256.0;
};

/// Fraction of the non-DC spectral energy in bins [center - 1, center + 1].
inline double peak_energy_fraction(const Spectrum& s, std::size_t center) {
  const std::size_t last = s.power.size() - 1;
  auto weighted = [&](std::size_t k) { return (k == last) ? s.power[k] : 2.0 * s.power[k]; };
  CompensatedSum total, peak;
  for (std::size_t k = 1; k <= last; ++k) {
    total.add(weighted(k));
    if (k + 1 >= center && k <= center + 1) peak.add(weighted(k));
  }
  return peak.value() / total.value();
}

inline ExperimentReport run_spectral_suite(const SpectralConfig& cfg, RngSeed seed) {
  if (cfg.n < (1u << 14) || (cfg.n & (cfg.n - 1)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "spectral suite needs a power of two >= 2^14");
  }
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "spectral_suite";
  r.trials = cfg.trials;

  const auto sine = sine_wave(cfg.sine_n, cfg.sine_period);
  const auto sine_spec = power_spectrum(sine.ys());
  const auto peak_bin = static_cast<std::size_t>(std::llround(static_cast<double>(sine_spec.length) / cfg.sine_period));
  const auto top = std::max_element(sine_spec.power.begin() + 1, sine_spec.power.end()) - sine_spec.power.begin();
  r.holds("sine_peak_at_expected_bin", static_cast<std::size_t>(top) == peak_bin);
  r.band("sine_peak_energy_fraction", peak_energy_fraction(sine_spec, peak_bin), 0.95, 1.0);

  std::vector<double> white, brown;
  double parseval_worst = 0.0;
  double reconstruction_worst = 0.0;
  double reconstruction_spectrum_worst = 0.0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto g = gaussian_white(cfg.n, 0.0, 1.0, derive_seed(seed, "spectral-white", t));
    const auto walk = brownian_walk(gaussian_white(cfg.n, 0.0, 1.0, derive_seed(seed, "spectral-brown", t)));
    const auto gs = power_spectrum(g);
    const auto ws = power_spectrum(walk);
    white.push_back(spectral_slope(gs).fit.slope);
    brown.push_back(spectral_slope(ws).fit.slope);

    for (const auto* pair : {&g, &walk}) {
      const auto& series = *pair;
      const auto& spec = pair == &g ? gs : ws;
      const auto taper = hann_window(spec.length);
      CompensatedSum energy;
      for (std::size_t i = 0; i < spec.length; ++i) energy.add(series[i] * taper[i] * series[i] * taper[i]);
      parseval_worst = std::max(parseval_worst, std::abs(spectral_energy(spec) - energy.value()) / energy.value());
    }

    // Rebuild the walk from its increments.
    const auto rebuilt = cumsum(diff(walk));
    double scale = 0.0;
    for (double v : walk) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < walk.size(); ++i) {
      reconstruction_worst = std::max(reconstruction_worst, std::abs(rebuilt[i] - (walk[i] - walk[0])) / scale);
    }
    const auto rs = power_spectrum(rebuilt);
    for (std::size_t k = 1; k <= ws.length / 8; ++k) {
      reconstruction_spectrum_worst =
          std::max(reconstruction_spectrum_worst, std::abs(rs.power[k] - ws.power[k]) / ws.power[k]);
    }
  }
  const auto [wmin, wmax] = std::minmax_element(white.begin(), white.end());
  const auto [bmin, bmax] = std::minmax_element(brown.begin(), brown.end());
  r.band("mean_white_slope", detail::mean(white), -0.2, 0.2);
  r.band("min_white_slope", *wmin, -0.2, 0.2);
  r.band("max_white_slope", *wmax, -0.2, 0.2);
  r.band("mean_brown_slope", detail::mean(brown), -2.3, -1.7);
  r.band("min_brown_slope", *bmin, -2.3, -1.7);
  r.band("max_brown_slope", *bmax, -2.3, -1.7);
  r.band("parseval_relative_error", parseval_worst, 0.0, 1e-6);
  r.band("reconstruction_max_relative_error", reconstruction_worst, 0.0, 1e-9);
  r.band("reconstruction_spectrum_max_relative_error", reconstruction_spectrum_worst, 0.0, 1e-6);

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

struct HurstSuiteConfig {
  std::size_t n = 4096;
  std::size_t trials = 100;
  std::size_t min_segment = 32;
};

inline constexpr double kRescaledRangeConstant = 1.2533;  // sqrt(pi / 2)

inline ExperimentReport run_hurst_suite(const HurstSuiteConfig& cfg, RngSeed seed) {
  if (cfg.n < 4096) throw Error(ErrorCode::InvalidArgument, "Hurst suite needs n >= 4096");
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "hurst_suite";
  r.trials = cfg.trials;

  HurstConfig hc;
  hc.min_segment = cfg.min_segment;
  const auto scales = hc.scales(cfg.n);
  std::vector<double> hs;
  std::vector<CompensatedSum> ratio_sums(scales.size());
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto res = hurst_exponent(gaussian_white(cfg.n, 0.0, 1.0, derive_seed(seed, "hurst", t)), hc);
    hs.push_back(res.estimate.value);
    for (std::size_t i = 0; i < res.scales.size() && i < scales.size(); ++i) {
      ratio_sums[i].add(res.scales[i].mean_rescaled_range / std::sqrt(static_cast<double>(res.scales[i].length)));
    }
  }
  const auto [hmin, hmax] = std::minmax_element(hs.begin(), hs.end());
  r.band("mean_h_white", detail::mean(hs), 0.42, 0.58);
  r.note("min_h_white", *hmin, 0.42, 0.58);
  r.note("max_h_white", *hmax, 0.42, 0.58);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    r.band(detail::label("rs_over_sqrt_n_at_", scales[i]), ratio_sums[i].value() / static_cast<double>(cfg.trials), 1.0, 1.5);
  }

  std::vector<double> alternating(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) alternating[i] = (i % 2 == 0) ? 1.0 : -1.0;
  r.band("h_alternating", hurst_exponent(alternating, hc).estimate.value, 0.0, 0.0);

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

struct HiguchiSuiteConfig {
  std::size_t n = 1u << 14;
  std::size_t trials = 10;
  std::size_t burn_in = 1000;
};

inline ExperimentReport run_higuchi_suite(const HiguchiSuiteConfig& cfg, RngSeed seed) {
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "higuchi_suite";
  r.trials = cfg.trials;
  const auto hc = HiguchiConfig::for_length(cfg.n);

  std::vector<double> ramp(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) ramp[i] = 0.5 * static_cast<double>(i);
  const auto ramp_res = higuchi_dimension(ramp, hc);
  r.band("ramp_dimension", ramp_res.estimate.value, 1.0 - 1e-9, 1.0 + 1e-9);
  r.band("ramp_r_squared", ramp_res.fit.r_squared, 1.0 - 1e-9, 1.0);

  std::vector<double> brown, white;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    brown.push_back(
        higuchi_dimension(detail::burned_in_walk(cfg.n, cfg.burn_in, derive_seed(seed, "higuchi-brown", t)), hc).estimate.value);
    white.push_back(higuchi_dimension(gaussian_white(cfg.n, 0.0, 1.0, derive_seed(seed, "higuchi-white", t)), hc).estimate.value);
  }
  const auto [bmin, bmax] = std::minmax_element(brown.begin(), brown.end());
  const auto [wmin, wmax] = std::minmax_element(white.begin(), white.end());
  r.band("mean_dhig_brown", detail::mean(brown), 1.4, 1.6);
  r.note("min_dhig_brown", *bmin, 1.4, 1.6);
  r.note("max_dhig_brown", *bmax, 1.4, 1.6);
  r.band("mean_dhig_white", detail::mean(white), 1.9, 2.05);
  r.note("min_dhig_white", *wmin, 1.9, 2.05);
  r.note("max_dhig_white", *wmax, 1.9, 2.05);

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

/// Escape-time and attractor sanity checks.
inline ExperimentReport run_chaos_sanity() {
  detail::Stopwatch clock;
  ExperimentReport r;
  r.name = "chaos_sanity";
  r.trials = 1;

  const MandelbrotWindow w;
  r.band("escape_count_c_0", escape_count(0.0, 0.0, w.max_iter), w.max_iter, w.max_iter);
  r.band("escape_count_c_minus_1", escape_count(-1.0, 0.0, w.max_iter), w.max_iter, w.max_iter);
  r.band("escape_count_c_1", escape_count(1.0, 0.0, w.max_iter, 2.0), 3, 3);

  MandelbrotWindow small;
  small.width = 120;
  small.height = 80;
  small.max_iter = 256;
  const auto grid = mandelbrot_grid(small);
  std::size_t mismatches = 0;
  for (std::size_t row = 0; row < grid.height; ++row) {
    for (std::size_t col = 0; col < grid.width; ++col) {
      mismatches += grid.at(col, row) != grid.at(col, grid.height - 1 - row);
    }
  }
  r.band("conjugate_row_mismatches", static_cast<double>(mismatches), 0.0, 0.0);

  const LorenzParams p;
  double extent = 0.0;
  bool bounded = true;
  try {
    for (const auto& s : lorenz_trajectory(p)) {
      for (double v : s) extent = std::max(extent, std::abs(v));
    }
  } catch (const Error&) {
    bounded = false;
  }
  r.holds("lorenz_bounded", bounded);
  r.band("lorenz_max_abs_coordinate", extent, 0.0, 100.0);

  LorenzParams eq = p;
  const double c = std::sqrt(p.beta * (p.rho - 1.0));
  eq.x0 = c;
  eq.y0 = c;
  eq.z0 = p.rho - 1.0;
  eq.steps = 1000;
  double drift = 0.0;
  for (const auto& s : lorenz_trajectory(eq)) {
    drift = std::max({drift, std::abs(s[0] - eq.x0), std::abs(s[1] - eq.y0), std::abs(s[2] - eq.z0)});
  }
  r.band("lorenz_equilibrium_drift", drift, 0.0, 1e-6);

  r.runtime_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

struct ValidationOptions {
  RngSeed seed{kDefaultSeed};
  bool quick = false;
  bool full = false;
  std::optional<std::string> digits_file;
};

/// All experiments, in a fixed order.
inline std::vector<ExperimentReport> run_validation(const ValidationOptions& opt) {
  WhiteBrownConfig wb;
  KatzConfig katz;
  DigitConfig digits;
  SpectralConfig spectral;
  HurstSuiteConfig hurst;
  HiguchiSuiteConfig higuchi;
  if (opt.quick) {
    wb.trials = 10;
    wb.trend_sizes = {1'000, 10'000, 100'000};
    wb.trend_trials = 5;
    katz.sizes = {100, 1'000, 10'000};
    katz.profile_length = 2'000;
    spectral.trials = 5;
    hurst.trials = 30;
    higuchi.trials = 3;
  }
  digits.digits_file = opt.digits_file;
  digits.full_scale = opt.full;

  std::vector<ExperimentReport> out;
  out.push_back(run_koch_convergence(8));
  out.push_back(run_white_brown_ds(wb, derive_seed(opt.seed, "white_brown_ds")));
  out.push_back(run_katz_refutation(katz, derive_seed(opt.seed, "katz_refutation")));
  out.push_back(run_higuchi_suite(higuchi, derive_seed(opt.seed, "higuchi_suite")));
  out.push_back(run_hurst_suite(hurst, derive_seed(opt.seed, "hurst_suite")));
  out.push_back(run_spectral_suite(spectral, derive_seed(opt.seed, "spectral_suite")));
  out.push_back(run_digit_comparison(digits, derive_seed(opt.seed, "digit_comparison")));
  out.push_back(run_chaos_sanity());
  return out;
}

/// CSV: name,statistic,value,low,high,pass. Informational rows carry
/// "info" in the pass column.
inline void write_report_csv(std::ostream& out, const std::vector<ExperimentReport>& reports,
                             io::RealStyle style = io::RealStyle::Report) {
  out << "name,statistic,value,low,high,pass\n";
  for (const auto& rep : reports) {
    for (const auto& c : rep.checks) {
      out << rep.name << ',' << c.statistic << ',' << io::format_real(c.value, style) << ','
          << io::format_real(c.low, style) << ',' << io::format_real(c.high, style) << ','
          << (c.informational ? "info" : (c.pass ? "true" : "false")) << '\n';
    }
  }
}

}  // namespace wavedim::harness
