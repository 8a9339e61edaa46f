#pragma once

// Text and image plumbing for the command-line tool: series CSV files,
// number formatting, binary PGM.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "wavedim/core.hpp"
#include "wavedim/error.hpp"

namespace wavedim::io {

/// Parses one real. Accepts decimal and C99 hex-float (0x1.8p+1) spellings,
/// surrounding blanks allowed, nothing else.
inline std::optional<double> parse_real(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  double value = 0.0;
  std::from_chars_result res{};
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
    body.remove_prefix(2);
    res = std::from_chars(body.data(), body.data() + body.size(), value, std::chars_format::hex);
  } else {
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) return std::nullopt;
    res = std::from_chars(body.data(), body.data() + body.size(), value, std::chars_format::general);
  }
  if (res.ec != std::errc() || res.ptr != body.data() + body.size()) return std::nullopt;
  return negative ? -value : value;
}

/// One column (series) or two columns (x,y waveform).
struct SeriesData {
  std::vector<double> xs;  // empty for one-column input
  std::vector<double> ys;
  bool has_header = false;

  bool two_column() const noexcept { return !xs.empty(); }

  /// Two-column data keeps its abscissa; one column gets 0..N-1.
  Waveform waveform() const { return two_column() ? Waveform(xs, ys) : Waveform::from_series(ys); }

  /// As waveform(), but x,y pairs may be any planar polyline (Koch output).
  Waveform curve() const { return two_column() ? Waveform::curve(xs, ys) : Waveform::from_series(ys); }
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace detail

/// Reads a series CSV. A first row that does not parse as numbers is taken
/// as a header; blank lines are skipped. Errors name the source and line.
inline SeriesData read_series(std::istream& in, const std::string& source = "<input>") {
  SeriesData data;
  std::string line;
  std::size_t line_no = 0;
  std::size_t columns = 0;
  bool first_content = true;

  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::Parse, source + ":" + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::blank(line)) continue;
    const auto fields = detail::split_fields(line);
    std::vector<double> values;
    bool numeric = true;
    for (auto f : fields) {
      auto v = parse_real(f);
      if (!v) {
        numeric = false;
        break;
      }
      values.push_back(*v);
    }
    if (first_content) {
      first_content = false;
      if (!numeric) {
        if (fields.size() > 2) throw fail("expected 1 or 2 columns, header has " + std::to_string(fields.size()));
        data.has_header = true;
        columns = fields.size();
        continue;
      }
    }
    if (!numeric) throw fail("not a number: '" + line + "'");
    if (columns == 0) columns = values.size();
    if (values.size() != columns) {
      throw fail("expected " + std::to_string(columns) + " column(s), found " + std::to_string(values.size()));
    }
    if (columns > 2) throw fail("expected 1 or 2 columns, found " + std::to_string(columns));
    for (double v : values) {
      if (!std::isfinite(v)) throw fail("non-finite value");
    }
    if (columns == 2) {
      data.xs.push_back(values[0]);
      data.ys.push_back(values[1]);
    } else {
      data.ys.push_back(values[0]);
    }
  }
  if (data.ys.empty()) throw Error(ErrorCode::Parse, source + ": no data rows");
  return data;
}

inline SeriesData read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open");
  return read_series(in, path);
}

enum class RealStyle {
  Report,    // 9 significant digits
  Exact,     // 17 significant digits; round-trips
  HexFloat,  // %a; round-trips bit for bit
};

inline std::string format_real(double v, RealStyle style = RealStyle::Report) {
  char buf[64];
  switch (style) {
    case RealStyle::Report: std::snprintf(buf, sizeof buf, "%.9g", v); break;
    case RealStyle::Exact: std::snprintf(buf, sizeof buf, "%.17g", v); break;
    case RealStyle::HexFloat: std::snprintf(buf, sizeof buf, "%a", v); break;
  }
  return buf;
}

/// Binary greymap, 8 bits per pixel, rows top to bottom.
inline void write_pgm(std::ostream& out, std::size_t width, std::size_t height, const std::vector<std::uint8_t>& pixels) {
  if (pixels.size() != width * height) throw Error(ErrorCode::LengthMismatch, "pixel buffer does not match image size");
  out << "P5\n" << width << ' ' << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

}  // namespace wavedim::io
