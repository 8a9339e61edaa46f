#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "error_code.hpp"
#include "oracles.hpp"
#include "wavedim/core.hpp"

using namespace wavedim;

TEST(CompensatedSum, RecoversCancelledTerms) {
  CompensatedSum s;
  for (double v : {1.0, 1e100, 1.0, -1e100}) s.add(v);
  EXPECT_EQ(s.value(), 2.0);
}

TEST(CompensatedSum, TenthsAddUpExactly) {
  CompensatedSum s;
  for (int i = 0; i < 1'000'000; ++i) s.add(0.1);
  EXPECT_NEAR(s.value(), 100000.0, 1e-9);
}

TEST(Waveform, RejectsBadInput) {
  EXPECT_EQ(code_of([] { Waveform({0, 1}, {0}); }), ErrorCode::InvalidWaveform);
  EXPECT_EQ(code_of([] { Waveform({0}, {0}); }), ErrorCode::InvalidWaveform);
  EXPECT_EQ(code_of([] { Waveform({0, 2, 1}, {0, 0, 0}); }), ErrorCode::InvalidWaveform);
  EXPECT_EQ(code_of([] { Waveform({0, 1}, {0, std::numeric_limits<double>::quiet_NaN()}); }), ErrorCode::InvalidWaveform);
  EXPECT_EQ(code_of([] { Waveform::curve({0, 1}, {std::numeric_limits<double>::infinity(), 0}); }),
            ErrorCode::InvalidWaveform);
}

TEST(Waveform, CurveAllowsFoldingAbscissa) {
  const auto w = Waveform::curve({0, 2, 1}, {0, 1, 2});
  EXPECT_EQ(w.size(), 3u);
  EXPECT_FALSE(w.monotone_abscissa());
  EXPECT_TRUE(Waveform({0, 0, 1}, {1, 2, 3}).monotone_abscissa());
}

TEST(Waveform, FromSeriesUsesUnitAbscissa) {
  const std::vector<double> y = {3, 1, 4, 1, 5};
  const auto w = Waveform::from_series(y);
  for (std::size_t i = 0; i < y.size(); ++i) {
    EXPECT_EQ(w.xs()[i], static_cast<double>(i));
    EXPECT_EQ(w.ys()[i], y[i]);
  }
  EXPECT_EQ(w.segments(), 4u);
}

TEST(Normalize, MapsIntoUnitSquare) {
  const auto n = normalize(Waveform({0, 1, 2, 4}, {-2, 6, 2, 0}));
  const std::vector<double> ex = {0, 0.25, 0.5, 1};
  const std::vector<double> ey = {0, 1, 0.5, 0.25};
  for (std::size_t i = 0; i < ex.size(); ++i) {
    EXPECT_DOUBLE_EQ(n.xs()[i], ex[i]);
    EXPECT_DOUBLE_EQ(n.ys()[i], ey[i]);
  }
}

TEST(Normalize, Errors) {
  EXPECT_EQ(code_of([] { normalize(Waveform({-1, 1}, {0, 1})); }), ErrorCode::NegativeAbscissa);
  EXPECT_EQ(code_of([] { normalize(Waveform({0, 0}, {0, 1})); }), ErrorCode::ZeroAbscissa);
  EXPECT_EQ(code_of([] { normalize(Waveform({0, 1, 2}, {3, 3, 3})); }), ErrorCode::FlatSignal);
}

TEST(Normalize, PropertyIdempotentAndBounded) {
  oracle::Cases cases(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto y = cases.series(cases.size(3, 300), -1e3, 1e3);
    const auto once = normalize(Waveform::from_series(y));
    const auto twice = normalize(once.as_waveform());
    double lo = 1, hi = 0;
    for (std::size_t i = 0; i < once.size(); ++i) {
      ASSERT_GE(once.ys()[i], 0.0);
      ASSERT_LE(once.ys()[i], 1.0);
      ASSERT_EQ(twice.xs()[i], once.xs()[i]);
      ASSERT_NEAR(twice.ys()[i], once.ys()[i], 1e-15);
      lo = std::min(lo, once.ys()[i]);
      hi = std::max(hi, once.ys()[i]);
    }
    ASSERT_EQ(lo, 0.0);
    ASSERT_EQ(hi, 1.0);
    ASSERT_EQ(once.xs().back(), 1.0);
  }
}

TEST(PolylineLength, KnownShapes) {
  const std::vector<double> x = {0, 3, 3};
  const std::vector<double> y = {0, 4, 0};
  EXPECT_DOUBLE_EQ(polyline_length(x, y), 9.0);
  const auto n = normalize(Waveform({0, 1}, {0, 1}));
  EXPECT_DOUBLE_EQ(polyline_length(n), std::sqrt(2.0));
}

TEST(DiffCumsum, Conventions) {
  const std::vector<double> r = {5, 7, 4, 4, 10};
  EXPECT_EQ(diff(r), (std::vector<double>{0, 2, -3, 0, 6}));
  EXPECT_EQ(cumsum(std::vector<double>{9, 1, 2, 3}), (std::vector<double>{0, 1, 3, 6}));
  EXPECT_EQ(code_of([] { diff(std::vector<double>{}); }), ErrorCode::TooShort);
  EXPECT_EQ(code_of([] { cumsum(std::vector<double>{}); }), ErrorCode::TooShort);
}

TEST(DiffCumsum, PropertyInverseUpToAnchor) {
  oracle::Cases cases(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = cases.series(cases.size(1, 500));
    const auto back = cumsum(diff(r));
    for (std::size_t i = 0; i < r.size(); ++i) ASSERT_NEAR(back[i], r[i] - r[0], 1e-9);
  }
}

TEST(LeastSquares, HandWorkedExample) {
  const auto fit = least_squares(std::vector<double>{0, 1, 2, 3}, std::vector<double>{1, 3, 2, 5});
  EXPECT_NEAR(fit.slope, 1.1, 1e-14);
  EXPECT_NEAR(fit.intercept, 1.1, 1e-14);
  EXPECT_NEAR(fit.r_squared, 1.0 - 2.7 / 8.75, 1e-14);
}

TEST(LeastSquares, ExactLineAndFlatResponse) {
  const auto fit = least_squares(std::vector<double>{1, 2, 4}, std::vector<double>{-1, -3, -7});
  EXPECT_DOUBLE_EQ(fit.slope, -2.0);
  EXPECT_DOUBLE_EQ(fit.intercept, 1.0);
  EXPECT_DOUBLE_EQ(fit.r_squared, 1.0);
  const auto flat = least_squares(std::vector<double>{1, 2, 3}, std::vector<double>{4, 4, 4});
  EXPECT_EQ(flat.slope, 0.0);
  EXPECT_EQ(flat.r_squared, 1.0);
}

TEST(LeastSquares, Errors) {
  EXPECT_EQ(code_of([] { least_squares(std::vector<double>{1, 2}, std::vector<double>{1}); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([] { least_squares(std::vector<double>{1}, std::vector<double>{1}); }), ErrorCode::DegenerateFit);
  EXPECT_EQ(code_of([] { least_squares(std::vector<double>{2, 2}, std::vector<double>{1, 3}); }), ErrorCode::DegenerateFit);
}

TEST(LeastSquares, PropertyMatchesNormalEquations) {
  oracle::Cases cases(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = cases.size(2, 100);
    const auto x = cases.series(n, 0, 10);
    const auto y = cases.series(n);
    const auto fit = least_squares(x, y);
    const auto ref = oracle::line(x, y);
    ASSERT_NEAR(fit.slope, ref.slope, 1e-8 * (1 + std::abs(ref.slope)));
    ASSERT_NEAR(fit.intercept, ref.intercept, 1e-8 * (1 + std::abs(ref.intercept)));
    ASSERT_GE(fit.r_squared, 0.0);
    ASSERT_LE(fit.r_squared, 1.0);
  }
}

TEST(ErrorType, MessageCarriesCode) {
  const Error e(ErrorCode::FlatSignal, "ordinate is constant");
  EXPECT_EQ(std::string(e.what()), std::string(to_string(ErrorCode::FlatSignal)) + ": ordinate is constant");
}
