#pragma once

// Waveform dimension estimators (Sevcik, Katz, Higuchi), the Hurst
// rescaled-range exponent, and a Vysochanskij-Petunin comparison of two
// estimates.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavedim/core.hpp"
#include "wavedim/error.hpp"

namespace wavedim {

enum class Method { Sevcik, Katz, Higuchi, Hurst };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Sevcik: return "sevcik";
    case Method::Katz: return "katz";
    case Method::Higuchi: return "higuchi";
    case Method::Hurst: return "hurst";
  }
  return "unknown";
}

struct DimensionEstimate {
  double value = 0.0;
  std::optional<double> variance;  // absent for estimators without a variance formula
  std::size_t n = 0;
  Method method = Method::Sevcik;
  bool approximate = false;  // Katz above the exact all-pairs limit
};

// ---------------------------------------------------------------------------
// Sevcik
// ---------------------------------------------------------------------------

/// Standard: D = 1 + ln(L) / ln(2N').
/// CoverConstant keeps the ln 2 of the ball count N(eps) = L / (2 eps) with
/// eps = 1/(2N'), i.e. D = 1 + ln(L/2) / ln(2N'). Opt-in only.
enum class SevcikForm { Standard, CoverConstant };

namespace detail {

inline DimensionEstimate sevcik_from_length(double length, double spread, std::size_t n, SevcikForm form) {
  const double segments = static_cast<double>(n - 1);
  const double log_cells = std::log(2.0 * segments);
  const double log_length = form == SevcikForm::Standard ? std::log(length) : std::log(length / 2.0);
  DimensionEstimate est;
  est.value = 1.0 + log_length / log_cells;
  est.variance = spread / (length * length * log_cells * log_cells);
  est.n = n;
  est.method = Method::Sevcik;
  return est;
}

}  // namespace detail

/// D_S of a waveform mapped into the unit square. The variance is the
/// first-order propagation of the spread of the N' normalized chord lengths
/// that make up L: var = sum (s_i - mean s)^2 / (L^2 ln(2N')^2).
inline DimensionEstimate sevcik_dimension(const Waveform& w, SevcikForm form = SevcikForm::Standard) {
  if (w.size() < 3) throw Error(ErrorCode::TooShort, "sevcik_dimension needs N >= 3");
  const NormalizedWaveform nw = normalize(w);
  const auto xs = nw.xs();
  const auto ys = nw.ys();
  const std::size_t segments = nw.segments();

  std::vector<double> chords(segments);
  CompensatedSum length;
  for (std::size_t i = 0; i < segments; ++i) {
    chords[i] = std::hypot(xs[i + 1] - xs[i], ys[i + 1] - ys[i]);
    length.add(chords[i]);
  }
  const double total = length.value();
  const double mean = total / static_cast<double>(segments);
  CompensatedSum spread;
  for (double s : chords) spread.add((s - mean) * (s - mean));
  return detail::sevcik_from_length(total, spread.value(), w.size(), form);
}

inline DimensionEstimate sevcik_dimension(std::span<const double> series, SevcikForm form = SevcikForm::Standard) {
  return sevcik_dimension(Waveform::from_series(series), form);
}

/// Two-pass D_S over a series too large to hold in memory. `make_source()`
/// must return a fresh generator (callable returning double) yielding the
/// same n values each time; the abscissa is unit-spaced from 0.
template <class SourceFactory>
DimensionEstimate sevcik_dimension_streaming(std::size_t n, SourceFactory make_source,
                                             SevcikForm form = SevcikForm::Standard) {
  if (n < 3) throw Error(ErrorCode::TooShort, "sevcik_dimension needs N >= 3");
  double lo = 0.0;
  double hi = 0.0;
  {
    auto next = make_source();
    lo = hi = next();
    for (std::size_t i = 1; i < n; ++i) {
      const double v = next();
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidWaveform, "non-finite sample at index " + std::to_string(i));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi == lo) throw Error(ErrorCode::FlatSignal, "ordinate is constant");

  const double range = hi - lo;
  const double dx = 1.0 / static_cast<double>(n - 1);
  auto next = make_source();
  double prev = (next() - lo) / range;
  CompensatedSum length;
  // Welford running mean / sum of squared deviations of the chord lengths.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double cur = (next() - lo) / range;
    const double s = std::hypot(dx, cur - prev);
    prev = cur;
    length.add(s);
    const double delta = s - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (s - mean);
  }
  return detail::sevcik_from_length(length.value(), m2, n, form);
}

// ---------------------------------------------------------------------------
// Sevcik on the triadic Koch curve, closed forms
// ---------------------------------------------------------------------------

/// RescaledGeometry: exact length of the generated one-sided Koch curve after
/// the ordinate is stretched by sqrt(12) into the unit square. Horizontal
/// segments keep length 3^-S, inclined ones become sqrt(37)/2 * 3^-S, and the
/// curve has N' = 4^S segments. Matches `sevcik_dimension(koch_curve(S))`.
/// Its error against ln4/ln3 falls strictly up to S = 9 (1.2682 at S = 8,
/// 1.2618 at S = 9); past that it keeps falling towards 1 + log_4(4/3)
/// = 1.2075, because ln(2N') counts samples, not covering cells.
///
/// TernaryGrid: the same structure with N' = 3^S cells and inclined length
/// sqrt(13)/6^S. This one does tend to ln4/ln3, but not monotonically: it
/// dips to 1.084 at S = 4 and is only 1.13 at S = 8.
enum class KochClosedForm { RescaledGeometry, TernaryGrid };

inline constexpr int kKochClosedFormMaxStage = 12;

inline DimensionEstimate sevcik_on_koch(int stage, KochClosedForm form = KochClosedForm::RescaledGeometry) {
  if (stage < 0) throw Error(ErrorCode::InvalidArgument, "Koch stage must be >= 0");
  if (stage > kKochClosedFormMaxStage) {
    throw Error(ErrorCode::StageTooLarge, "Koch closed form supports stages 0.." + std::to_string(kKochClosedFormMaxStage));
  }
  const auto segments = std::uint64_t{1} << (2 * stage);  // 4^S
  const std::uint64_t horizontal = (segments - 1) / 3 + 1;
  const std::uint64_t inclined = segments - horizontal;
  const double third_pow = std::pow(3.0, -stage);

  double length = 0.0;
  double cells = 0.0;
  if (form == KochClosedForm::RescaledGeometry) {
    length = static_cast<double>(horizontal) * third_pow + static_cast<double>(inclined) * std::sqrt(37.0) / 2.0 * third_pow;
    cells = static_cast<double>(segments);
  } else {
    length = static_cast<double>(horizontal) * third_pow + static_cast<double>(inclined) * std::sqrt(13.0) / std::pow(6.0, stage);
    cells = std::pow(3.0, stage);
  }
  DimensionEstimate est;
  est.value = 1.0 + std::log(length) / std::log(2.0 * cells);
  est.n = static_cast<std::size_t>(segments) + 1;
  est.method = Method::Sevcik;
  return est;
}

// ---------------------------------------------------------------------------
// Katz
// ---------------------------------------------------------------------------

/// Above this many points Katz' planar extension d falls back to the largest
/// distance from the first point (O(N)) and the estimate is flagged.
inline constexpr std::size_t kKatzExactLimit = 10'000;

/// D_K = log(N') / (log(N') + log(d / L)), d the planar extension (largest
/// pairwise distance), L the polyline length, both on the raw samples.
inline DimensionEstimate katz_dimension(const Waveform& w) {
  if (w.size() < 3) throw Error(ErrorCode::TooShort, "katz_dimension needs N >= 3");
  const auto xs = w.xs();
  const auto ys = w.ys();
  const double length = polyline_length(xs, ys);
  if (length == 0.0) throw Error(ErrorCode::ZeroLength, "all points coincide");

  const std::size_t n = w.size();
  double best = 0.0;
  const bool exact = n <= kKatzExactLimit;
  if (exact) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = xs[j] - xs[i];
        const double dy = ys[j] - ys[i];
        best = std::max(best, dx * dx + dy * dy);
      }
    }
  } else {
    for (std::size_t j = 1; j < n; ++j) {
      const double dx = xs[j] - xs[0];
      const double dy = ys[j] - ys[0];
      best = std::max(best, dx * dx + dy * dy);
    }
  }
  // d <= L by the triangle inequality; clamp away rounding on collinear input.
  const double extent = std::min(std::sqrt(best), length);
  const double log_segments = std::log(static_cast<double>(n - 1));

  DimensionEstimate est;
  est.value = log_segments / (log_segments + std::log(extent / length));
  est.n = n;
  est.method = Method::Katz;
  est.approximate = !exact;
  return est;
}

/// d/L for every prefix of the waveform (entry i covers points 0..i+1), with
/// the exact all-pairs extent maintained incrementally. O(N^2).
inline std::vector<double> katz_extent_ratio_profile(const Waveform& w) {
  const auto xs = w.xs();
  const auto ys = w.ys();
  std::vector<double> ratios;
  ratios.reserve(w.size() - 1);
  CompensatedSum length;
  double best = 0.0;
  for (std::size_t j = 1; j < w.size(); ++j) {
    length.add(std::hypot(xs[j] - xs[j - 1], ys[j] - ys[j - 1]));
    for (std::size_t i = 0; i < j; ++i) {
      const double dx = xs[j] - xs[i];
      const double dy = ys[j] - ys[i];
      best = std::max(best, dx * dx + dy * dy);
    }
    const double total = length.value();
    ratios.push_back(total == 0.0 ? 1.0 : std::min(std::sqrt(best), total) / total);
  }
  return ratios;
}

// ---------------------------------------------------------------------------
// Higuchi
// ---------------------------------------------------------------------------

enum class HiguchiLengthMode { AbsoluteDifference, EuclideanChord };

/// Stride schedule 1, 2, 3, 4 followed by round(2^((j-1)/4)) for j >= 11,
/// deduplicated and capped at N/4.
inline std::vector<std::size_t> default_higuchi_k(std::size_t n) {
  if (n < 64) throw Error(ErrorCode::SeriesTooShort, "default_higuchi_k needs N >= 64");
  const std::size_t cap = n / 4;
  std::vector<std::size_t> ks = {1, 2, 3, 4};
  for (int j = 11;; ++j) {
    const auto k = static_cast<std::size_t>(std::llround(std::exp2((j - 1) / 4.0)));
    if (k > cap) break;
    if (k > ks.back()) ks.push_back(k);
  }
  return ks;
}

struct HiguchiConfig {
  std::vector<std::size_t> k_values;
  HiguchiLengthMode length_mode = HiguchiLengthMode::AbsoluteDifference;

  /// The default schedule restricted to strides the estimator accepts for a
  /// series of length n (N >= 10 k).
  static HiguchiConfig for_length(std::size_t n, HiguchiLengthMode mode = HiguchiLengthMode::AbsoluteDifference) {
    HiguchiConfig cfg;
    cfg.length_mode = mode;
    for (std::size_t k : default_higuchi_k(n)) {
      if (10 * k <= n) cfg.k_values.push_back(k);
    }
    return cfg;
  }
};

struct HiguchiResult {
  DimensionEstimate estimate;
  LineFit fit;                      // log <L(k)> against log k
  std::vector<double> mean_length;  // <L(k)>, one per k
};

inline HiguchiResult higuchi_dimension(std::span<const double> series, const HiguchiConfig& cfg) {
  const auto& ks = cfg.k_values;
  if (ks.size() < 2) throw Error(ErrorCode::InvalidArgument, "Higuchi needs at least two strides");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1 || (i > 0 && ks[i] <= ks[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "Higuchi strides must be positive and strictly increasing");
    }
  }
  const std::size_t n = series.size();
  if (n < 10 * ks.back()) {
    throw Error(ErrorCode::SeriesTooShort,
                "Higuchi needs N >= 10 * max(k) (N=" + std::to_string(n) + ", max k=" + std::to_string(ks.back()) + ")");
  }

  HiguchiResult result;
  std::vector<double> log_k;
  std::vector<double> log_len;
  for (std::size_t k : ks) {
    const double kd = static_cast<double>(k);
    CompensatedSum over_offsets;
    for (std::size_t m = 1; m <= k; ++m) {
      const std::size_t steps = (n - m) / k;
      CompensatedSum curve;
      for (std::size_t i = 1; i <= steps; ++i) {
        const double delta = series[m - 1 + i * k] - series[m - 1 + (i - 1) * k];
        curve.add(cfg.length_mode == HiguchiLengthMode::AbsoluteDifference ? std::abs(delta) : std::hypot(kd, delta));
      }
      over_offsets.add(curve.value() * static_cast<double>(n - 1) / (static_cast<double>(steps) * kd * kd));
    }
    const double mean = over_offsets.value() / kd;
    if (!(mean > 0.0)) throw Error(ErrorCode::NonPositiveLength, "<L(k)> is zero at k=" + std::to_string(k));
    result.mean_length.push_back(mean);
    log_k.push_back(std::log(kd));
    log_len.push_back(std::log(mean));
  }
  result.fit = least_squares(log_k, log_len);
  result.estimate.value = -result.fit.slope;
  result.estimate.n = n;
  result.estimate.method = Method::Higuchi;
  return result;
}

// ---------------------------------------------------------------------------
// Hurst
// ---------------------------------------------------------------------------

struct HurstConfig {
  std::size_t min_segment = 8;

  /// Dyadic segment lengths N, N/2, N/4, ... down to min_segment.
  std::vector<std::size_t> scales(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t len = n; len >= min_segment && len > 0; len /= 2) out.push_back(len);
    return out;
  }
};

struct HurstScale {
  std::size_t length = 0;
  std::size_t segments = 0;
  std::size_t used = 0;  // segments with non-zero spread
  double mean_rescaled_range = 0.0;
};

struct HurstResult {
  DimensionEstimate estimate;
  LineFit fit;  // log <R/sigma> against log(n/2)
  std::vector<HurstScale> scales;
};

/// R/sigma of one segment: range of the running sum of deviations from the
/// segment mean over the population standard deviation. nullopt for a
/// constant segment.
inline std::optional<double> rescaled_range(std::span<const double> seg) {
  const auto [lo, hi] = std::minmax_element(seg.begin(), seg.end());
  if (*lo == *hi) return std::nullopt;
  const double n = static_cast<double>(seg.size());
  CompensatedSum total;
  for (double v : seg) total.add(v);
  const double mean = total.value() / n;
  double running = 0.0;
  double run_lo = 0.0;
  double run_hi = 0.0;
  CompensatedSum squares;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    const double d = seg[i] - mean;
    running += d;
    if (i == 0) {
      run_lo = run_hi = running;
    } else {
      run_lo = std::min(run_lo, running);
      run_hi = std::max(run_hi, running);
    }
    squares.add(d * d);
  }
  const double sigma = std::sqrt(squares.value() / n);
  return (run_hi - run_lo) / sigma;
}

inline HurstResult hurst_exponent(std::span<const double> series, const HurstConfig& cfg = {}) {
  if (cfg.min_segment < 8) throw Error(ErrorCode::InvalidArgument, "Hurst min_segment must be >= 8");
  const std::size_t n = series.size();
  if (n < 2 * cfg.min_segment) {
    throw Error(ErrorCode::SeriesTooShort, "Hurst needs N >= 2 * min_segment (N=" + std::to_string(n) + ")");
  }

  HurstResult result;
  std::vector<double> log_half;
  std::vector<double> log_rs;
  for (std::size_t len : cfg.scales(n)) {
    HurstScale scale;
    scale.length = len;
    scale.segments = n / len;
    CompensatedSum acc;
    for (std::size_t s = 0; s < scale.segments; ++s) {
      if (auto rs = rescaled_range(series.subspan(s * len, len))) {
        acc.add(*rs);
        ++scale.used;
      }
    }
    if (scale.used == 0) continue;
    scale.mean_rescaled_range = acc.value() / static_cast<double>(scale.used);
    result.scales.push_back(scale);
    log_half.push_back(std::log(static_cast<double>(len) / 2.0));
    log_rs.push_back(std::log(scale.mean_rescaled_range));
  }
  if (result.scales.empty()) throw Error(ErrorCode::ZeroVariance, "every segment is constant");
  if (result.scales.size() < 2) throw Error(ErrorCode::ZeroVariance, "fewer than two scales have non-constant segments");

  result.fit = least_squares(log_half, log_rs);
  result.estimate.value = result.fit.slope;
  result.estimate.n = n;
  result.estimate.method = Method::Hurst;
  return result;
}

// ---------------------------------------------------------------------------
// Vysochanskij-Petunin comparison
// ---------------------------------------------------------------------------

struct VpComparison {
  double lambda = 0.0;
  double p_bound = 1.0;
  bool significant = false;
};

/// lambda = |a - b| / sqrt(var a + var b); for unimodal estimators
/// P(|X - mu| >= lambda sigma) <= 4 / (9 lambda^2) when lambda > sqrt(8/3).
inline VpComparison vp_compare(const DimensionEstimate& a, const DimensionEstimate& b, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
  if (!a.variance || !b.variance || !(*a.variance > 0.0) || !(*b.variance > 0.0)) {
    throw Error(ErrorCode::MissingVariance, "both estimates need a positive variance");
  }
  VpComparison out;
  out.lambda = std::abs(a.value - b.value) / std::sqrt(*a.variance + *b.variance);
  out.p_bound = out.lambda > std::sqrt(8.0 / 3.0) ? std::min(1.0, 4.0 / (9.0 * out.lambda * out.lambda)) : 1.0;
  out.significant = out.p_bound < alpha;
  return out;
}

}  // namespace wavedim
