#pragma once

// Sliding-window tortuosity profiles (Q = D_S - 1), profile comparison
// against the identity line, and Hann-windowed spectral density.

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavedim/core.hpp"
#include "wavedim/error.hpp"
#include "wavedim/estimators.hpp"

namespace wavedim {

struct QProfile {
  std::size_t window = 0;
  std::vector<std::size_t> centers;
  std::vector<std::optional<double>> q;  // nullopt where the window is flat

  std::size_t missing() const {
    std::size_t count = 0;
    for (const auto& v : q) count += v ? 0 : 1;
    return count;
  }
};

/// Q = D_S - 1 for every window of `window` consecutive samples (step 1,
/// unit-spaced abscissa), assigned to the window's center i + window/2.
inline QProfile sliding_q(std::span<const double> series, std::size_t window) {
  if (window < 10) throw Error(ErrorCode::InvalidArgument, "window must be >= 10");
  if (series.size() < window) {
    throw Error(ErrorCode::WindowTooLarge,
                "window " + std::to_string(window) + " exceeds series length " + std::to_string(series.size()));
  }
  QProfile profile;
  profile.window = window;
  const std::size_t count = series.size() - window + 1;
  profile.centers.reserve(count);
  profile.q.reserve(count);
  for (std::size_t start = 0; start < count; ++start) {
    profile.centers.push_back(start + window / 2);
    try {
      profile.q.push_back(sevcik_dimension(series.subspan(start, window)).value - 1.0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FlatSignal) throw;
      profile.q.push_back(std::nullopt);
    }
  }
  return profile;
}

struct QComparison {
  LineFit fit;                  // free least-squares fit of b against a
  double identity_r_squared;    // 1 - SS(b - a) / SS(b - mean b); negative when y = x is worse than the mean
  std::vector<std::pair<double, double>> pairs;
};

/// Pairs the two profiles point by point (windows missing in either are
/// dropped) and scores agreement with the line of slope 1 and intercept 0.
inline QComparison q_compare(const QProfile& a, const QProfile& b) {
  if (a.q.size() != b.q.size() || a.window != b.window) {
    throw Error(ErrorCode::LengthMismatch, "profiles differ in length or window");
  }
  QComparison out{};
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < a.q.size(); ++i) {
    if (a.q[i] && b.q[i]) {
      out.pairs.emplace_back(*a.q[i], *b.q[i]);
      xs.push_back(*a.q[i]);
      ys.push_back(*b.q[i]);
    }
  }
  out.fit = least_squares(xs, ys);

  CompensatedSum total;
  for (double y : ys) total.add(y);
  const double mean = total.value() / static_cast<double>(ys.size());
  CompensatedSum ss_identity;
  CompensatedSum ss_total;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    ss_identity.add((ys[i] - xs[i]) * (ys[i] - xs[i]));
    ss_total.add((ys[i] - mean) * (ys[i] - mean));
  }
  if (ss_identity.value() == 0.0) {
    out.identity_r_squared = 1.0;
  } else {
    out.identity_r_squared = ss_total.value() == 0.0 ? 0.0 : 1.0 - ss_identity.value() / ss_total.value();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

struct Spectrum {
  std::size_t length = 0;          // M, the analyzed power-of-two prefix
  std::vector<double> freqs;       // k / M, cycles per sample, k = 0..M/2
  std::vector<double> magnitude;   // psi_f = sqrt(a_f^2 + b_f^2)
  std::vector<double> power;       // psi_f^2
};

namespace detail {

struct FftwPlanDeleter {
  void operator()(fftw_plan_s* p) const noexcept { fftw_destroy_plan(p); }
};

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

/// Bins 0..M/2 of the DFT of a real sequence.
inline std::vector<std::complex<double>> real_dft(std::span<const double> input) {
  const int m = static_cast<int>(input.size());
  std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * input.size())));
  std::unique_ptr<fftw_complex, FftwFree> out(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (input.size() / 2 + 1))));
  if (!in || !out) throw std::bad_alloc();
  std::unique_ptr<fftw_plan_s, FftwPlanDeleter> plan(fftw_plan_dft_r2c_1d(m, in.get(), out.get(), FFTW_ESTIMATE));
  std::copy(input.begin(), input.end(), in.get());
  fftw_execute(plan.get());
  std::vector<std::complex<double>> bins(input.size() / 2 + 1);
  for (std::size_t k = 0; k < bins.size(); ++k) bins[k] = {out.get()[k][0], out.get()[k][1]};
  return bins;
}

}  // namespace detail

/// Symmetric Hann taper w_i = 0.5 (1 - cos(2 pi i / (M - 1))).
inline std::vector<double> hann_window(std::size_t m) {
  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m - 1)));
  }
  return w;
}

/// Spectral density of the largest power-of-two prefix (no zero padding),
/// Hann-tapered.
inline Spectrum power_spectrum(std::span<const double> series) {
  if (series.size() < 64) throw Error(ErrorCode::SeriesTooShort, "power_spectrum needs N >= 64");
  std::size_t m = 1;
  while (m * 2 <= series.size()) m *= 2;

  const std::vector<double> taper = hann_window(m);
  std::vector<double> tapered(m);
  for (std::size_t i = 0; i < m; ++i) tapered[i] = series[i] * taper[i];
  const auto bins = detail::real_dft(tapered);

  Spectrum s;
  s.length = m;
  s.freqs.resize(bins.size());
  s.magnitude.resize(bins.size());
  s.power.resize(bins.size());
  for (std::size_t k = 0; k < bins.size(); ++k) {
    s.freqs[k] = static_cast<double>(k) / static_cast<double>(m);
    s.magnitude[k] = std::hypot(bins[k].real(), bins[k].imag());
    s.power[k] = s.magnitude[k] * s.magnitude[k];
  }
  return s;
}

/// Parseval: the one-sided bins folded back to the full-length DFT energy,
/// divided by M. Equals the energy of the tapered samples.
inline double spectral_energy(const Spectrum& s) {
  CompensatedSum total;
  const std::size_t last = s.power.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) total.add((k == 0 || k == last) ? s.power[k] : 2.0 * s.power[k]);
  return total.value() / static_cast<double>(s.length);
}

struct SpectralSlope {
  LineFit fit;            // log power against log frequency
  std::size_t bins = 0;   // bins 1..M/8
  bool floored = false;   // some bin had zero power and was raised to 1e-300
};

inline constexpr double kPowerFloor = 1e-300;

/// Log-log slope of power over bins 1..M/8. DC is excluded (log 0) and so
/// are the upper seven eighths, where sampling artifacts dominate.
inline SpectralSlope spectral_slope(const Spectrum& s) {
  const std::size_t top = s.length / 8;
  if (top < 16 || s.power.size() <= top) throw Error(ErrorCode::TooFewBins, "spectral_slope needs >= 16 bins in [1, M/8]");
  SpectralSlope out;
  out.bins = top;
  std::vector<double> log_f(top);
  std::vector<double> log_p(top);
  for (std::size_t k = 1; k <= top; ++k) {
    double p = s.power[k];
    if (!(p > 0.0)) {
      p = kPowerFloor;
      out.floored = true;
    }
    log_f[k - 1] = std::log(s.freqs[k]);
    log_p[k - 1] = std::log(p);
  }
  out.fit = least_squares(log_f, log_p);
  return out;
}

}  // namespace wavedim
