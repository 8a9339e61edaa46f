#pragma once

// Domain types and shared numeric helpers: waveforms, unit-square
// normalization, polyline length, differencing, running sums and
// ordinary least squares.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavedim/error.hpp"

namespace wavedim {

/// Neumaier-compensated accumulator. Long polyline sums (10^9 segments)
/// lose several digits with naive summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Ordered (x, y) samples. By default the abscissa must be monotone
/// non-decreasing; `Waveform::curve` admits general planar curves (the Koch
/// curve folds back on its abscissa).
class Waveform {
 public:
  Waveform(std::vector<double> xs, std::vector<double> ys) : Waveform(std::move(xs), std::move(ys), true) {}

  static Waveform curve(std::vector<double> xs, std::vector<double> ys) {
    return Waveform(std::move(xs), std::move(ys), false);
  }

  /// Unit-spaced abscissa 0, 1, ..., N-1.
  static Waveform from_series(std::span<const double> ys) {
    std::vector<double> xs(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
    return Waveform(std::move(xs), std::vector<double>(ys.begin(), ys.end()));
  }

  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  std::size_t size() const noexcept { return xs_.size(); }
  std::size_t segments() const noexcept { return xs_.size() - 1; }
  bool monotone_abscissa() const noexcept { return monotone_; }

 private:
  Waveform(std::vector<double> xs, std::vector<double> ys, bool require_monotone)
      : xs_(std::move(xs)), ys_(std::move(ys)), monotone_(require_monotone) {
    if (xs_.size() != ys_.size()) {
      throw Error(ErrorCode::InvalidWaveform, "xs and ys differ in length (" + std::to_string(xs_.size()) +
                                                  " vs " + std::to_string(ys_.size()) + ")");
    }
    if (xs_.size() < 2) throw Error(ErrorCode::InvalidWaveform, "a waveform needs at least 2 points");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
        throw Error(ErrorCode::InvalidWaveform, "non-finite sample at index " + std::to_string(i));
      }
      if (require_monotone && i > 0 && xs_[i] < xs_[i - 1]) {
        throw Error(ErrorCode::InvalidWaveform, "abscissa decreases at index " + std::to_string(i));
      }
    }
  }

  std::vector<double> xs_;
  std::vector<double> ys_;
  bool monotone_;
};

/// A waveform mapped into the unit square. Only `normalize` builds one.
class NormalizedWaveform {
 public:
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  std::size_t size() const noexcept { return xs_.size(); }
  std::size_t segments() const noexcept { return xs_.size() - 1; }

  /// Re-wraps the normalized samples as a waveform (for idempotence checks).
  Waveform as_waveform() const { return Waveform::curve(xs_, ys_); }

 private:
  friend NormalizedWaveform normalize(const Waveform& w);
  NormalizedWaveform(std::vector<double> xs, std::vector<double> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {}

  std::vector<double> xs_;
  std::vector<double> ys_;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// x* = x / x_max, y* = (y - y_min) / (y_max - y_min). The abscissa is
/// divided by its maximum only, so it must start at x >= 0.
inline NormalizedWaveform normalize(const Waveform& w) {
  const auto xs = w.xs();
  const auto ys = w.ys();
  const auto [x_lo, x_hi] = std::minmax_element(xs.begin(), xs.end());
  const auto [y_lo, y_hi] = std::minmax_element(ys.begin(), ys.end());
  if (*x_lo < 0.0) throw Error(ErrorCode::NegativeAbscissa, "abscissa minimum is negative");
  if (*x_hi == 0.0) throw Error(ErrorCode::ZeroAbscissa, "abscissa maximum is zero");
  if (*y_hi == *y_lo) throw Error(ErrorCode::FlatSignal, "ordinate is constant");

  const double x_max = *x_hi;
  const double y_min = *y_lo;
  const double y_range = *y_hi - *y_lo;
  std::vector<double> nx(xs.size());
  std::vector<double> ny(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    nx[i] = xs[i] / x_max;
    ny[i] = (ys[i] - y_min) / y_range;
  }
  return NormalizedWaveform(std::move(nx), std::move(ny));
}

/// Sum of Euclidean chords between consecutive points.
inline double polyline_length(std::span<const double> xs, std::span<const double> ys) {
  CompensatedSum total;
  for (std::size_t i = 1; i < xs.size(); ++i) total.add(std::hypot(xs[i] - xs[i - 1], ys[i] - ys[i - 1]));
  return total.value();
}

inline double polyline_length(const NormalizedWaveform& w) { return polyline_length(w.xs(), w.ys()); }

/// out[0] = 0, out[t] = y[t] - y[t-1].
inline std::vector<double> diff(std::span<const double> series) {
  if (series.empty()) throw Error(ErrorCode::TooShort, "diff needs at least one value");
  std::vector<double> out(series.size(), 0.0);
  for (std::size_t t = 1; t < series.size(); ++t) out[t] = series[t] - series[t - 1];
  return out;
}

/// out[0] = 0, out[i] = out[i-1] + in[i]; in[0] is not used. Inverse of `diff`
/// up to the anchor: cumsum(diff(r))[i] == r[i] - r[0].
inline std::vector<double> cumsum(std::span<const double> series) {
  if (series.empty()) throw Error(ErrorCode::TooShort, "cumsum needs at least one value");
  std::vector<double> out(series.size(), 0.0);
  for (std::size_t i = 1; i < series.size(); ++i) out[i] = out[i - 1] + series[i];
  return out;
}

inline LineFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::LengthMismatch, "least_squares: xs and ys differ in length");
  if (xs.size() < 2) throw Error(ErrorCode::DegenerateFit, "least_squares needs at least 2 points");
  const double n = static_cast<double>(xs.size());
  CompensatedSum sx, sy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx.add(xs[i]);
    sy.add(ys[i]);
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;
  CompensatedSum sxx, sxy, syy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx.add(dx * dx);
    sxy.add(dx * dy);
    syy.add(dy * dy);
  }
  if (sxx.value() == 0.0) throw Error(ErrorCode::DegenerateFit, "all abscissae are equal");

  LineFit fit;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  CompensatedSum ss_res;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res.add(r * r);
  }
  const double ss_tot = syy.value();
  fit.r_squared = ss_tot == 0.0 ? 1.0 : std::clamp(1.0 - ss_res.value() / ss_tot, 0.0, 1.0);
  return fit;
}

}  // namespace wavedim
