// wavedim: generate reference signals, estimate fractal dimensions, run the
// validation suite.
//
// Exit status: 0 success, 1 usage error, 2 data error (or a failed check in
// `validate`).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wavedim.hpp"

namespace {

using namespace wavedim;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Globals {
  bool porcelain = false;
  bool hex_floats = false;
  std::string out;
  std::uint64_t seed = harness::kDefaultSeed;
};

/// Destination chosen by --out (stdout when empty).
class Sink {
 public:
  explicit Sink(const std::string& path, bool binary = false) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
      if (!*file_) throw Error(ErrorCode::InvalidArgument, path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

/// Key/value report printed either as aligned text or as key=value lines.
class Report {
 public:
  Report(const Globals& g) : g_(g) {}

  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  void add(const std::string& key, double value) { add(key, io::format_real(value, style())); }
  void add_count(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
  void add_flag(const std::string& key, bool value) { add(key, value ? "true" : "false"); }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (g_.porcelain) {
        out << k << '=' << v << '\n';
      } else {
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
      }
    }
  }

 private:
  io::RealStyle style() const { return g_.hex_floats ? io::RealStyle::HexFloat : io::RealStyle::Report; }

  const Globals& g_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

io::RealStyle data_style(const Globals& g) { return g.hex_floats ? io::RealStyle::HexFloat : io::RealStyle::Exact; }

// Reports go to stdout unless stdout already carries the data.
std::ostream& report_stream(const Sink& sink) { return sink.to_stdout() ? std::cerr : std::cout; }

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  std::size_t n = 10'000;
  double mean = 0.0;
  double variance = 1.0;
  int stage = 3;
  double period = 256.0;
  LorenzParams lorenz;
  std::string integrator = "rk4";
};

void cmd_gen(const Globals& g, const GenArgs& a) {
  Sink sink(g.out);
  auto& out = sink.stream();
  const auto style = data_style(g);
  const RngSeed seed{g.seed};
  std::ostringstream prov;
  prov << "gen kind=" << a.kind;

  if (a.kind == "white" || a.kind == "brownian") {
    prov << " n=" << a.n << " mean=" << io::format_real(a.mean, io::RealStyle::Exact)
         << " variance=" << io::format_real(a.variance, io::RealStyle::Exact) << " seed=" << g.seed;
    auto values = gaussian_white(a.n, a.mean, a.variance, seed);
    if (a.kind == "brownian") values = brownian_walk(values);
    for (double v : values) out << io::format_real(v, style) << '\n';
  } else if (a.kind == "digits") {
    prov << " n=" << a.n << " seed=" << g.seed;
    for (int d : uniform_digits(a.n, seed)) out << d << '\n';
  } else if (a.kind == "koch") {
    prov << " stage=" << a.stage;
    const auto w = koch_curve(a.stage);
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << io::format_real(w.xs()[i], style) << ',' << io::format_real(w.ys()[i], style) << '\n';
    }
  } else if (a.kind == "sine") {
    prov << " n=" << a.n << " period=" << io::format_real(a.period, io::RealStyle::Exact);
    const auto w = sine_wave(a.n, a.period);
    for (double v : w.ys()) out << io::format_real(v, style) << '\n';
  } else if (a.kind == "lorenz") {
    LorenzParams p = a.lorenz;
    p.integrator = a.integrator == "euler" ? LorenzIntegrator::ExplicitMap : LorenzIntegrator::RungeKutta4;
    prov << " steps=" << p.steps << " sigma=" << io::format_real(p.sigma, io::RealStyle::Exact)
         << " rho=" << io::format_real(p.rho, io::RealStyle::Exact)
         << " beta=" << io::format_real(p.beta, io::RealStyle::Exact)
         << " start=" << io::format_real(p.x0, io::RealStyle::Exact) << ',' << io::format_real(p.y0, io::RealStyle::Exact)
         << ',' << io::format_real(p.z0, io::RealStyle::Exact) << " dt=" << io::format_real(p.dt, io::RealStyle::Exact)
         << " integrator=" << a.integrator;
    for (const auto& s : lorenz_trajectory(p)) {
      out << io::format_real(s[0], style) << ',' << io::format_real(s[1], style) << ',' << io::format_real(s[2], style)
          << '\n';
    }
  }
  std::cerr << prov.str() << '\n';
}

// ---------------------------------------------------------------------------
// dim

struct DimArgs {
  std::string file;
  std::string method = "sevcik";
  std::optional<std::size_t> k_max;
  std::string length_mode = "abs";
  std::size_t min_segment = 8;
  std::string sevcik_form = "standard";
};

void add_fit(Report& r, const LineFit& fit) {
  r.add("slope", fit.slope);
  r.add("intercept", fit.intercept);
  r.add("r_squared", fit.r_squared);
}

void cmd_dim(const Globals& g, const DimArgs& a) {
  const auto data = io::read_series_file(a.file);
  Report r(g);
  r.add("method", a.method);

  if (a.method == "sevcik") {
    const auto form = a.sevcik_form == "cover" ? SevcikForm::CoverConstant : SevcikForm::Standard;
    const auto est = sevcik_dimension(data.waveform(), form);
    r.add("value", est.value);
    r.add("variance", *est.variance);
    r.add_count("n", est.n);
  } else if (a.method == "katz") {
    const auto est = katz_dimension(data.curve());
    r.add("value", est.value);
    r.add_count("n", est.n);
    r.add_flag("approximate", est.approximate);
  } else if (a.method == "higuchi") {
    auto cfg = HiguchiConfig::for_length(
        data.ys.size(), a.length_mode == "chord" ? HiguchiLengthMode::EuclideanChord : HiguchiLengthMode::AbsoluteDifference);
    if (a.k_max) std::erase_if(cfg.k_values, [&](std::size_t k) { return k > *a.k_max; });
    const auto res = higuchi_dimension(data.ys, cfg);
    r.add("value", res.estimate.value);
    r.add_count("n", res.estimate.n);
    r.add_count("k_count", cfg.k_values.size());
    r.add_count("k_max", cfg.k_values.back());
    add_fit(r, res.fit);
  } else {
    HurstConfig cfg;
    cfg.min_segment = a.min_segment;
    const auto res = hurst_exponent(data.ys, cfg);
    r.add("value", res.estimate.value);
    r.add_count("n", res.estimate.n);
    r.add_count("scales", res.scales.size());
    add_fit(r, res.fit);
  }
  Sink sink(g.out);
  r.print(sink.stream());
}

// ---------------------------------------------------------------------------
// window, spectrum

void cmd_window(const Globals& g, const std::string& file, std::size_t window) {
  const auto data = io::read_series_file(file);
  const auto profile = sliding_q(data.ys, window);
  Sink sink(g.out);
  auto& out = sink.stream();
  out << "center,q\n";
  for (std::size_t i = 0; i < profile.q.size(); ++i) {
    out << profile.centers[i] << ',';
    if (profile.q[i]) out << io::format_real(*profile.q[i], data_style(g));
    out << '\n';
  }
  Report r(g);
  r.add_count("window", window);
  r.add_count("windows", profile.q.size());
  r.add_count("missing", profile.missing());
  r.print(report_stream(sink));
}

void cmd_spectrum(const Globals& g, const std::string& file) {
  const auto data = io::read_series_file(file);
  const auto spec = power_spectrum(data.ys);
  const auto slope = spectral_slope(spec);
  Sink sink(g.out);
  auto& out = sink.stream();
  out << "freq,power\n";
  for (std::size_t k = 0; k < spec.freqs.size(); ++k) {
    out << io::format_real(spec.freqs[k], data_style(g)) << ',' << io::format_real(spec.power[k], data_style(g)) << '\n';
  }
  Report r(g);
  r.add_count("length", spec.length);
  r.add_count("fit_bins", slope.bins);
  add_fit(r, slope.fit);
  r.add_flag("floored", slope.floored);
  r.print(report_stream(sink));
}

// ---------------------------------------------------------------------------
// mandelbrot

void cmd_mandelbrot(const Globals& g, const MandelbrotWindow& w, bool raw) {
  const auto grid = mandelbrot_grid(w);
  Sink sink(g.out, !raw);
  auto& out = sink.stream();
  if (raw) {
    for (std::size_t row = 0; row < grid.height; ++row) {
      for (std::size_t col = 0; col < grid.width; ++col) out << (col ? "," : "") << grid.at(col, row);
      out << '\n';
    }
    return;
  }
  // In-set pixels (count == max_iter) are black.
  std::vector<std::uint8_t> pixels(grid.counts.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = static_cast<std::uint8_t>(255 - (255LL * grid.counts[i]) / grid.max_iter);
  }
  io::write_pgm(out, grid.width, grid.height, pixels);
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const Globals& g, bool quick, bool full, const std::string& digits_file, const std::string& report) {
  harness::ValidationOptions opt;
  opt.seed = RngSeed{g.seed};
  opt.quick = quick;
  opt.full = full;
  if (!digits_file.empty()) opt.digits_file = digits_file;
  const auto reports = harness::run_validation(opt);

  Sink sink(g.out);
  auto& out = sink.stream();
  bool all = true;
  for (const auto& rep : reports) {
    std::size_t checked = 0;
    std::size_t failed = 0;
    for (const auto& c : rep.checks) {
      if (c.informational) continue;
      ++checked;
      failed += c.pass ? 0 : 1;
    }
    all = all && rep.passed();
    if (g.porcelain) {
      out << "experiment=" << rep.name << " pass=" << (rep.passed() ? "true" : "false") << " checks=" << checked
          << " failed=" << failed << " trials=" << rep.trials << '\n';
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f s", rep.runtime_seconds);
      out << rep.name << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << checked - failed << '/' << checked
          << " checks, " << rep.trials << " trials, " << buf << ")\n";
      for (const auto& c : rep.checks) {
        if (!c.informational && !c.pass) {
          out << "  failed " << c.statistic << " = " << io::format_real(c.value) << " not in ["
              << io::format_real(c.low) << ", " << io::format_real(c.high) << "]\n";
        }
      }
    }
  }
  if (!report.empty()) {
    std::ofstream f(report);
    if (!f) throw Error(ErrorCode::InvalidArgument, report + ": cannot open for writing");
    harness::write_report_csv(f, reports, g.hex_floats ? io::RealStyle::HexFloat : io::RealStyle::Report);
  }
  return all ? 0 : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractal dimension estimation for sampled waveforms"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--porcelain", g.porcelain, "key=value output for scripts");
  app.add_flag("--hex-floats", g.hex_floats, "print reals as C99 hex floats (bit-exact)");
  app.add_option("--out,-o", g.out, "output file (default stdout)");
  app.add_option("--seed", g.seed, "master RNG seed");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a reference signal as CSV");
  gen_cmd->add_option("kind", gen.kind, "signal kind")
      ->required()
      ->check(CLI::IsMember({"white", "brownian", "digits", "koch", "sine", "lorenz"}));
  gen_cmd->add_option("--n", gen.n, "number of samples")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--mean", gen.mean, "white/brownian: noise mean");
  gen_cmd->add_option("--variance", gen.variance, "white/brownian: noise variance")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--stage", gen.stage, "koch: recursion stage")->check(CLI::Range(0, kKochMaxStage));
  gen_cmd->add_option("--period", gen.period, "sine: period in samples")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--steps", gen.lorenz.steps, "lorenz: number of steps")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--sigma", gen.lorenz.sigma, "lorenz: sigma");
  gen_cmd->add_option("--rho", gen.lorenz.rho, "lorenz: rho");
  gen_cmd->add_option("--beta", gen.lorenz.beta, "lorenz: beta");
  gen_cmd->add_option("--x0", gen.lorenz.x0, "lorenz: initial x");
  gen_cmd->add_option("--y0", gen.lorenz.y0, "lorenz: initial y");
  gen_cmd->add_option("--z0", gen.lorenz.z0, "lorenz: initial z");
  gen_cmd->add_option("--dt", gen.lorenz.dt, "lorenz: step size")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--integrator", gen.integrator, "lorenz: rk4 or euler")->check(CLI::IsMember({"rk4", "euler"}));

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "estimate the dimension of a series file");
  dim_cmd->add_option("file", dim.file, "CSV series or x,y waveform")->required();
  dim_cmd->add_option("--method", dim.method, "sevcik, katz, higuchi or hurst")
      ->check(CLI::IsMember({"sevcik", "katz", "higuchi", "hurst"}));
  dim_cmd->add_option("--k-max", dim.k_max, "higuchi: largest stride")->check(CLI::PositiveNumber);
  dim_cmd->add_option("--length-mode", dim.length_mode, "higuchi: abs or chord")->check(CLI::IsMember({"abs", "chord"}));
  dim_cmd->add_option("--min-segment", dim.min_segment, "hurst: smallest segment length");
  dim_cmd->add_option("--sevcik-form", dim.sevcik_form, "sevcik: standard or cover")
      ->check(CLI::IsMember({"standard", "cover"}));

  std::string window_file;
  std::size_t window = 0;
  auto* window_cmd = app.add_subcommand("window", "sliding-window Q = D_S - 1 profile");
  window_cmd->add_option("file", window_file, "CSV series")->required();
  window_cmd->add_option("--window", window, "window length (>= 10)")->required();

  std::string spectrum_file;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Hann-windowed power spectrum and log-log slope");
  spectrum_cmd->add_option("file", spectrum_file, "CSV series")->required();

  MandelbrotWindow mw;
  bool raw = false;
  auto* mandel_cmd = app.add_subcommand("mandelbrot", "escape-time grid as PGM (or raw CSV counts)");
  mandel_cmd->add_option("--x-min", mw.x_min);
  mandel_cmd->add_option("--x-max", mw.x_max);
  mandel_cmd->add_option("--y-min", mw.y_min);
  mandel_cmd->add_option("--y-max", mw.y_max);
  mandel_cmd->add_option("--width", mw.width)->check(CLI::PositiveNumber);
  mandel_cmd->add_option("--height", mw.height)->check(CLI::PositiveNumber);
  mandel_cmd->add_option("--max-iter", mw.max_iter)->check(CLI::PositiveNumber);
  mandel_cmd->add_option("--escape-radius", mw.escape_radius)->check(CLI::PositiveNumber);
  mandel_cmd->add_flag("--raw", raw, "CSV of raw iteration counts");

  bool quick = false;
  bool full = false;
  std::string digits_file;
  std::string report_file;
  auto* validate_cmd = app.add_subcommand("validate", "run the validation experiments");
  auto* quick_opt = validate_cmd->add_flag("--quick", quick, "smaller trial counts");
  validate_cmd->add_flag("--full", full, "include the 10^9-digit streamed run")->excludes(quick_opt);
  validate_cmd->add_option("--digits-file", digits_file, "decimal digits to compare against their shuffle")
      ->check(CLI::ExistingFile);
  validate_cmd->add_option("--report", report_file, "CSV report: name,statistic,value,low,high,pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) cmd_gen(g, gen);
    if (*dim_cmd) cmd_dim(g, dim);
    if (*window_cmd) cmd_window(g, window_file, window);
    if (*spectrum_cmd) cmd_spectrum(g, spectrum_file);
    if (*mandel_cmd) cmd_mandelbrot(g, mw, raw);
    if (*validate_cmd) return cmd_validate(g, quick, full, digits_file, report_file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
