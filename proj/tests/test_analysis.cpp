#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "error_code.hpp"
#include "oracles.hpp"
#include "wavedim/analysis.hpp"
#include "wavedim/generators.hpp"

using namespace wavedim;

// --- sliding Q ----------------------------------------------------------------

TEST(SlidingQ, WindowsCentersAndValues) {
  oracle::Cases cases(501);
  const auto y = cases.series(300);
  const auto p = sliding_q(y, 40);
  ASSERT_EQ(p.q.size(), 261u);
  ASSERT_EQ(p.centers.size(), 261u);
  for (std::size_t i = 0; i < p.q.size(); ++i) {
    ASSERT_EQ(p.centers[i], i + 20);
    ASSERT_TRUE(p.q[i]);
    const std::vector<double> win(y.begin() + static_cast<std::ptrdiff_t>(i), y.begin() + static_cast<std::ptrdiff_t>(i + 40));
    ASSERT_NEAR(*p.q[i], oracle::sevcik(win) - 1.0, 1e-12);
  }
  EXPECT_EQ(p.missing(), 0u);
}

TEST(SlidingQ, FirstWindowOfFiveHundredCentersAt250) {
  const auto y = gaussian_white(1000, 0.0, 1.0, RngSeed{2});
  const auto p = sliding_q(y, 500);
  EXPECT_EQ(p.centers.front(), 250u);
  EXPECT_EQ(p.centers.back(), 750u);
  EXPECT_EQ(p.q.size(), 501u);
}

TEST(SlidingQ, FlatWindowsAreMissing) {
  std::vector<double> y(60, 1.0);
  for (std::size_t i = 30; i < 60; ++i) y[i] = static_cast<double>(i % 4);
  const auto p = sliding_q(y, 10);
  ASSERT_EQ(p.q.size(), 51u);
  for (std::size_t i = 0; i < p.q.size(); ++i) EXPECT_EQ(p.q[i].has_value(), i + 10 > 30) << i;
  EXPECT_EQ(p.missing(), 21u);
}

TEST(SlidingQ, Errors) {
  const std::vector<double> y(50, 0.0);
  EXPECT_EQ(code_of([&] { sliding_q(y, 9); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { sliding_q(y, 51); }), ErrorCode::WindowTooLarge);
}

// --- comparison ---------------------------------------------------------------

TEST(QCompare, IdenticalProfilesSitOnIdentity) {
  const auto y = gaussian_white(500, 0.0, 1.0, RngSeed{5});
  const auto p = sliding_q(y, 50);
  const auto c = q_compare(p, p);
  EXPECT_NEAR(c.fit.slope, 1.0, 1e-12);
  EXPECT_NEAR(c.fit.intercept, 0.0, 1e-12);
  EXPECT_EQ(c.identity_r_squared, 1.0);
  EXPECT_EQ(c.pairs.size(), p.q.size());
}

TEST(QCompare, IdentityScoreByHand) {
  QProfile a, b;
  a.window = b.window = 10;
  a.q = {0.1, 0.2, std::nullopt, 0.4};
  b.q = {0.2, 0.2, 0.5, 0.5};
  a.centers = b.centers = {5, 6, 7, 8};
  const auto c = q_compare(a, b);
  ASSERT_EQ(c.pairs.size(), 3u);
  // b = 0.2, 0.2, 0.5; mean 0.3; SS_tot = 0.06; SS(b - a) = 0.01 + 0 + 0.01.
  EXPECT_NEAR(c.identity_r_squared, 1.0 - 0.02 / 0.06, 1e-12);
  // A profile shifted far off the identity scores below zero.
  for (auto& v : b.q) v = *v + 1.0;
  EXPECT_LT(q_compare(a, b).identity_r_squared, 0.0);
}

TEST(QCompare, Errors) {
  QProfile a, b;
  a.window = b.window = 10;
  a.q = {0.1, 0.2};
  b.q = {0.1};
  EXPECT_EQ(code_of([&] { q_compare(a, b); }), ErrorCode::LengthMismatch);
  b.q = {0.1, 0.3};
  b.window = 12;
  EXPECT_EQ(code_of([&] { q_compare(a, b); }), ErrorCode::LengthMismatch);
}

// --- spectra -----------------------------------------------------------------

TEST(Hann, SymmetricWithZeroEnds) {
  const auto w = hann_window(65);
  EXPECT_NEAR(w.front(), 0.0, 1e-15);
  EXPECT_NEAR(w.back(), 0.0, 1e-15);
  EXPECT_NEAR(w[32], 1.0, 1e-15);
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(w[i], w[w.size() - 1 - i], 1e-15);
}

TEST(Spectrum, MatchesNaiveDftOfTaperedPrefix) {
  oracle::Cases cases(601);
  const auto y = cases.series(200);  // analyzed prefix M = 128
  const auto s = power_spectrum(y);
  ASSERT_EQ(s.length, 128u);
  ASSERT_EQ(s.power.size(), 65u);
  const auto w = hann_window(128);
  std::vector<double> tapered(128);
  for (std::size_t i = 0; i < 128; ++i) tapered[i] = y[i] * w[i];
  const auto ref = oracle::dft(tapered);
  for (std::size_t k = 0; k < ref.size(); ++k) {
    EXPECT_NEAR(s.magnitude[k], std::abs(ref[k]), 1e-10) << k;
    EXPECT_NEAR(s.power[k], std::norm(ref[k]), 1e-9) << k;
    EXPECT_DOUBLE_EQ(s.freqs[k], static_cast<double>(k) / 128.0);
  }
}

TEST(Spectrum, ParsevalOnTaperedSamples) {
  const auto y = gaussian_white(5000, 0.0, 1.0, RngSeed{12});
  const auto s = power_spectrum(y);
  const auto w = hann_window(s.length);
  double energy = 0.0;
  for (std::size_t i = 0; i < s.length; ++i) energy += y[i] * w[i] * y[i] * w[i];
  EXPECT_NEAR(spectral_energy(s), energy, 1e-9 * energy);
}

TEST(Spectrum, SinePutsEnergyInOneBin) {
  const auto sine = sine_wave(8192, 256.0);
  const auto s = power_spectrum(sine.ys());
  std::size_t top = 1;
  for (std::size_t k = 1; k < s.power.size(); ++k) {
    if (s.power[k] > s.power[top]) top = k;
  }
  EXPECT_EQ(top, 32u);
  double near = 0.0, all = 0.0;
  for (std::size_t k = 1; k < s.power.size(); ++k) {
    all += s.power[k];
    if (k >= 31 && k <= 33) near += s.power[k];
  }
  EXPECT_GT(near / all, 0.95);
}

TEST(SpectralSlope, RecoversInjectedPowerLaw) {
  Spectrum s;
  s.length = 1024;
  for (std::size_t k = 0; k <= 512; ++k) {
    const double f = static_cast<double>(k) / 1024.0;
    s.freqs.push_back(f);
    s.power.push_back(k == 0 ? 0.0 : 3.0 / f);
    s.magnitude.push_back(std::sqrt(s.power.back()));
  }
  const auto fit = spectral_slope(s);
  EXPECT_NEAR(fit.fit.slope, -1.0, 1e-12);
  EXPECT_NEAR(fit.fit.intercept, std::log(3.0), 1e-12);
  EXPECT_EQ(fit.bins, 128u);
  EXPECT_FALSE(fit.floored);
}

TEST(SpectralSlope, ZeroPowerIsFlooredAndFlagged) {
  const std::vector<double> zero(1024, 0.0);
  const auto fit = spectral_slope(power_spectrum(zero));
  EXPECT_TRUE(fit.floored);
  EXPECT_NEAR(fit.fit.slope, 0.0, 1e-12);
}

TEST(SpectralSlope, WhiteFlatBrownSteep) {
  const auto g = gaussian_white(1u << 14, 0.0, 1.0, RngSeed{77});
  EXPECT_NEAR(spectral_slope(power_spectrum(g)).fit.slope, 0.0, 0.2);
  EXPECT_NEAR(spectral_slope(power_spectrum(brownian_walk(g))).fit.slope, -2.0, 0.3);
}

TEST(Spectrum, Errors) {
  EXPECT_EQ(code_of([] { power_spectrum(std::vector<double>(63, 1.0)); }), ErrorCode::SeriesTooShort);
  // M = 64 leaves 8 bins in [1, M/8].
  EXPECT_EQ(code_of([] { spectral_slope(power_spectrum(gaussian_white(100, 0, 1, RngSeed{1}))); }),
            ErrorCode::TooFewBins);
  EXPECT_NO_THROW(spectral_slope(power_spectrum(gaussian_white(128, 0, 1, RngSeed{1}))));
}
