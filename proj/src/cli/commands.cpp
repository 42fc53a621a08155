#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fractalis/autocorr.hpp"
#include "fractalis/cli.hpp"
#include "fractalis/density.hpp"
#include "fractalis/error.hpp"
#include "fractalis/ingest.hpp"
#include "fractalis/rescaled_range.hpp"
#include "fractalis/simulate.hpp"
#include "fractalis/stable.hpp"
#include "report.hpp"

#ifndef FRACTALIS_VERSION
#define FRACTALIS_VERSION "unknown"
#endif

namespace fractalis::cli {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> series_names{"close", "open", "returns", "log-returns", "W", "L", "D"};

struct Options {
  std::string input;
  std::string value_col;  // read one generic column instead of an OHLC table
  std::string date_col = "Date";
  std::string open_col = "Open";
  std::string close_col = "Close";
  std::string date_format;
  std::string series = "close";
  bool normalize = false;
  bool lenient = false;
  bool has_seed = false;
  std::uint64_t seed = 0;

  // kde
  double bandwidth = 0.0;  // 0 selects the Silverman rule
  std::string kernel = "gaussian";
  std::size_t grid_points = 512;
  bool compare_noise = false;

  // acf
  std::size_t max_lag = 0;  // 0 selects N - 1

  // hurst
  std::string scales = "dyadic";
  std::size_t min_scale = 8;
  std::size_t max_scale = 0;  // 0 selects N / 2
  bool sweep = false;

  // simulate
  std::string kind = "white-noise";
  std::size_t n = 1000;
  std::size_t steps = 1000;
  double alpha = 2.0, beta = 0.0, gamma = 1.0, delta = 0.0;
  std::string parameterization = "S0";
  double start = 1.0;
  bool prices = false;
  double start_price = 1.0;
};

struct Output {
  std::string out;
  std::string data_dir = ".";
};

bool stochastic(const std::string& command, const Options& o) {
  return command == "simulate" || (command == "kde" && o.compare_noise);
}

json seed_json(const Options& o) { return o.has_seed ? json(o.seed) : json(nullptr); }

// Effective options echoed in the report, defaults included. Only options
// that can change the result are listed, so output paths stay out.
json to_params(const std::string& command, const Options& o) {
  json p;
  if (command == "simulate") {
    p["kind"] = o.kind;
    if (o.kind == "white-noise") {
      p["n"] = o.n;
    } else {
      if (o.kind == "stable-noise") p["n"] = o.n;
      else p["steps"] = o.steps;
      p["alpha"] = o.alpha;
      p["beta"] = o.beta;
      p["gamma"] = o.gamma;
      p["delta"] = o.delta;
      p["parameterization"] = o.parameterization;
      if (o.kind == "walk") {
        p["start"] = o.start;
        p["prices"] = o.prices;
        p["start_price"] = o.start_price;
      }
    }
    p["seed"] = seed_json(o);
    return p;
  }
  p["input"] = o.input;
  p["value_col"] = o.value_col.empty() ? json(nullptr) : json(o.value_col);
  p["date_col"] = o.date_col;
  p["open_col"] = o.open_col;
  p["close_col"] = o.close_col;
  p["date_format"] = o.date_format.empty() ? json(nullptr) : json(o.date_format);
  p["lenient"] = o.lenient;
  if (command != "describe") {
    p["series"] = o.series;
    p["normalize"] = o.normalize;
  }
  if (command == "kde") {
    p["bandwidth"] = o.bandwidth > 0.0 ? json(o.bandwidth) : json("silverman");
    p["kernel"] = o.kernel;
    p["grid_points"] = o.grid_points;
    p["compare_noise"] = o.compare_noise;
  } else if (command == "acf") {
    p["max_lag"] = o.max_lag > 0 ? json(o.max_lag) : json("n-1");
  } else if (command == "hurst") {
    p["scales"] = o.scales;
    p["min_scale"] = o.min_scale;
    p["max_scale"] = o.max_scale > 0 ? json(o.max_scale) : json("n/2");
    p["sweep"] = o.sweep;
  }
  p["seed"] = seed_json(o);
  return p;
}

template <class T>
void take(const json& p, const char* key, T& field) {
  if (p.contains(key) && !p.at(key).is_null()) field = p.at(key).get<T>();
}

Options from_params(const json& p) {
  Options o;
  take(p, "input", o.input);
  take(p, "value_col", o.value_col);
  take(p, "date_col", o.date_col);
  take(p, "open_col", o.open_col);
  take(p, "close_col", o.close_col);
  take(p, "date_format", o.date_format);
  take(p, "series", o.series);
  take(p, "normalize", o.normalize);
  take(p, "lenient", o.lenient);
  if (p.contains("seed") && !p.at("seed").is_null()) {
    o.has_seed = true;
    o.seed = p.at("seed").get<std::uint64_t>();
  }
  if (p.contains("bandwidth") && p.at("bandwidth").is_number()) o.bandwidth = p.at("bandwidth").get<double>();
  take(p, "kernel", o.kernel);
  take(p, "grid_points", o.grid_points);
  take(p, "compare_noise", o.compare_noise);
  if (p.contains("max_lag") && p.at("max_lag").is_number()) o.max_lag = p.at("max_lag").get<std::size_t>();
  take(p, "scales", o.scales);
  take(p, "min_scale", o.min_scale);
  if (p.contains("max_scale") && p.at("max_scale").is_number()) o.max_scale = p.at("max_scale").get<std::size_t>();
  take(p, "sweep", o.sweep);
  take(p, "kind", o.kind);
  take(p, "n", o.n);
  take(p, "steps", o.steps);
  take(p, "alpha", o.alpha);
  take(p, "beta", o.beta);
  take(p, "gamma", o.gamma);
  take(p, "delta", o.delta);
  take(p, "parameterization", o.parameterization);
  take(p, "start", o.start);
  take(p, "prices", o.prices);
  take(p, "start_price", o.start_price);
  return o;
}

json stats_json(const SummaryStats& s) {
  return json{{"n", s.n},
              {"mean", s.mean},
              {"sd", s.sd},
              {"min", s.quantiles[0]},
              {"q25", s.quantiles[1]},
              {"median", s.quantiles[2]},
              {"q75", s.quantiles[3]},
              {"max", s.quantiles[4]}};
}

json params_json(const StableParams& p) {
  return json{{"alpha", p.alpha},
              {"beta", p.beta},
              {"gamma", p.gamma},
              {"delta", p.delta},
              {"parameterization", std::string(to_string(p.parameterization))}};
}

// Loaded input: either a full OHLC table or one generic column.
struct Input {
  std::string digest;
  std::optional<OhlcTable> table;
  std::optional<Series> column;
  std::vector<std::string> warnings;
};

Input load(const Options& o) {
  if (o.input.empty()) throw CliError{usage_error, "--input is required"};
  const std::string bytes = read_file(o.input);
  Input in;
  in.digest = sha256_hex(bytes);
  if (!o.value_col.empty()) {
    in.column = read_column(bytes, o.value_col, o.date_col);
    return in;
  }
  CsvSchema schema;
  schema.date = o.date_col;
  schema.open = o.open_col;
  schema.close = o.close_col;
  if (!o.date_format.empty()) schema.alternate_date_format = o.date_format;
  auto parsed = parse_csv_text(bytes, schema, o.lenient ? ParseMode::lenient : ParseMode::strict);
  for (const auto& issue : parsed.rejected)
    in.warnings.push_back("skipped line " + std::to_string(issue.line) + ": " + issue.reason);
  in.table = std::move(parsed.table);
  return in;
}

Series derive(const Input& in, const std::string& name) {
  if (in.column) {
    const Series& y = *in.column;
    if (name == "close") return y;
    if (name == "returns") return returns(y);
    if (name == "log-returns") return log_returns(y);
    if (name == "W") return diff_within(y);
    throw CliError{usage_error, "--series " + name + " needs open and close columns; drop --value-col"};
  }
  const OhlcTable& t = *in.table;
  if (name == "close") return closing(t);
  if (name == "open") return opening(t);
  if (name == "returns") return returns(closing(t));
  if (name == "log-returns") return log_returns(closing(t));
  if (name == "W") return diff_within(closing(t));
  if (name == "L") return diff_lagged(opening(t), closing(t));
  if (name == "D") return diff_same_day(closing(t), opening(t));
  throw CliError{usage_error, "unknown series '" + name + "'"};
}

Series analysed(const Input& in, const Options& o) {
  const Series s = derive(in, o.series);
  return o.normalize ? normalize(s) : s;
}

void require_seed(const std::string& command, const Options& o) {
  if (stochastic(command, o) && !o.has_seed)
    throw CliError{usage_error, command + " draws random numbers; pass --seed"};
}

StableParams stable_params(const Options& o) {
  if (o.parameterization != "S0" && o.parameterization != "S1")
    throw CliError{usage_error, "--parameterization must be S0 or S1"};
  return StableParams{o.alpha, o.beta, o.gamma, o.delta,
                      o.parameterization == "S0" ? Parameterization::S0 : Parameterization::S1};
}

struct DataFile {
  std::string name;
  std::string contents;
};

struct Outcome {
  Report report;
  std::vector<DataFile> files;
};

Outcome cmd_describe(const Options& o) {
  const Input in = load(o);
  Outcome out;
  Report& r = out.report;
  r.input_digest = in.digest;
  r.warnings = in.warnings;
  const std::vector<std::string> names =
      in.column ? std::vector<std::string>{"close", "returns", "log-returns", "W"} : series_names;
  CsvTable csv({"series", "n", "mean", "sd", "min", "q25", "median", "q75", "max"});
  json series = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) {
    try {
      const SummaryStats s = summarize(derive(in, names[i]));
      series[names[i]] = stats_json(s);
      csv.add_row({static_cast<double>(i), static_cast<double>(s.n), s.mean, s.sd, s.quantiles[0], s.quantiles[1],
                   s.quantiles[2], s.quantiles[3], s.quantiles[4]});
    } catch (const Error& e) {
      if (category(e.code()) == ErrorCategory::numeric) throw;
      r.warnings.push_back(names[i] + ": " + e.what());
    }
  }
  if (in.table) {
    r.results["rows"] = in.table->size();
    r.results["first_date"] = format_iso(in.table->rows().front().date);
    r.results["last_date"] = format_iso(in.table->rows().back().date);
  } else {
    r.results["rows"] = in.column->size();
  }
  r.results["series_index"] = names;
  r.results["series"] = series;
  out.files.push_back({"", csv.str()});
  return out;
}

Outcome cmd_kde(const Options& o) {
  require_seed("kde", o);
  const Input in = load(o);
  const Series s = analysed(in, o);
  const Kernel kernel = kernel_from_string(o.kernel);
  const double h = o.bandwidth > 0.0 ? o.bandwidth : bandwidth_silverman(s);
  if (o.grid_points < 2) throw CliError{usage_error, "--grid-points must be at least 2"};
  const std::vector<double> grid = default_grid(s, h, o.grid_points);
  const KdeResult est = kde(s, grid, h, kernel);

  Outcome out;
  Report& r = out.report;
  r.input_digest = in.digest;
  r.warnings = in.warnings;
  r.results["n"] = est.n;
  r.results["bandwidth"] = est.bandwidth;
  r.results["kernel"] = std::string(to_string(kernel));
  r.results["grid_min"] = grid.front();
  r.results["grid_max"] = grid.back();
  r.results["integral"] = trapezoid(est.grid, est.density);

  std::vector<std::string> header{"x", "density"};
  std::optional<KdeResult> noise;
  if (o.compare_noise) {
    noise = kde(white_noise(s.size(), o.seed), grid, h, kernel);
    header.insert(header.end(), {"noise_density", "difference"});
    const Series diff = kde_difference(est, *noise);
    double max_abs = 0.0;
    for (double d : diff.values()) max_abs = std::max(max_abs, std::abs(d));
    r.results["max_abs_difference"] = max_abs;
  }
  CsvTable csv(header);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (noise)
      csv.add_row({grid[i], est.density[i], noise->density[i], est.density[i] - noise->density[i]});
    else
      csv.add_row({grid[i], est.density[i]});
  }
  out.files.push_back({"", csv.str()});
  return out;
}

Outcome cmd_acf(const Options& o) {
  const Input in = load(o);
  const Series s = analysed(in, o);
  if (s.size() < 2) throw Error(ErrorCode::TooShort, "autocorrelation needs at least two values");
  const std::size_t lag = o.max_lag > 0 ? o.max_lag : s.size() - 1;
  const AcfResult a = autocorrelation(s, lag);

  Outcome out;
  Report& r = out.report;
  r.input_digest = in.digest;
  r.warnings = in.warnings;
  r.results["n"] = a.n;
  r.results["max_lag"] = a.max_lag();
  r.results["gamma0"] = a.gamma0;
  r.results["white_noise_band"] = a.white_noise_band();
  const SummaryStats st = acf_summary(a);
  r.results["lag_mean"] = st.mean;
  r.results["lag_sd"] = st.sd;
  std::size_t peak = 1;
  for (std::size_t h = 1; h < a.rho.size(); ++h)
    if (std::abs(a.rho[h]) > std::abs(a.rho[peak])) peak = h;
  r.results["peak_lag"] = peak;
  r.results["peak_rho"] = a.rho[peak];
  r.results["rho1"] = a.rho[1];

  CsvTable csv({"lag", "rho"});
  for (std::size_t h = 0; h < a.rho.size(); ++h) csv.add_row({static_cast<double>(h), a.rho[h]});
  out.files.push_back({"", csv.str()});
  return out;
}

std::vector<std::size_t> parse_scales(const Options& o, std::size_t n) {
  const std::size_t max_scale = o.max_scale > 0 ? o.max_scale : n / 2;
  if (o.scales == "dyadic") {
    auto s = dyadic_scales(n, o.min_scale);
    std::erase_if(s, [&](std::size_t m) { return m > max_scale; });
    return s;
  }
  if (o.scales == "log") return log_spaced_scales(o.min_scale, max_scale);
  std::vector<std::size_t> out;
  std::stringstream ss(o.scales);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw CliError{usage_error, "--scales takes dyadic, log, or a comma-separated list of block lengths"};
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Outcome cmd_hurst(const Options& o) {
  const Input in = load(o);
  const Series s = analysed(in, o);
  const auto scales = parse_scales(o, s.size());
  const HurstEstimate est = hurst(s, scales);

  Outcome out;
  Report& r = out.report;
  r.input_digest = in.digest;
  r.warnings = in.warnings;
  r.warnings.insert(r.warnings.end(), est.warnings.begin(), est.warnings.end());
  r.results["n"] = s.size();
  r.results["H"] = est.H;
  r.results["c"] = est.c;
  r.results["r_squared"] = est.r_squared;
  r.results["scales"] = scales;

  CsvTable csv({"m", "blocks", "mean_rs", "log_m", "log_rs", "skipped"});
  for (const auto& p : est.points)
    csv.add_row({static_cast<double>(p.scale_m), static_cast<double>(p.d), p.mean_rs,
                 std::log(static_cast<double>(p.scale_m)), std::log(p.mean_rs), static_cast<double>(p.skipped)});
  out.files.push_back({"", csv.str()});

  if (o.sweep) {
    const std::size_t max_scale = o.max_scale > 0 ? o.max_scale : s.size() / 2;
    const auto sweep = hurst_sweep(s, max_scale, o.min_scale);
    json js = json::array();
    CsvTable sc({"cutoff", "H"});
    for (const auto& p : sweep) {
      js.push_back({{"cutoff", p.cutoff}, {"H", p.H}});
      sc.add_row({static_cast<double>(p.cutoff), p.H});
    }
    r.results["sweep"] = js;
    out.files.push_back({"sweep", sc.str()});
  }
  return out;
}

json tail_json(const StableParams& p, TailPrefactor form, std::vector<std::string>& warnings) {
  try {
    const TailLaw law = tail_from_fit(p, form);
    return json{{"C", law.C}, {"exponent", law.exponent}, {"valid_from", law.valid_from},
                {"form", std::string(to_string(form))}};
  } catch (const Error& e) {
    if (category(e.code()) == ErrorCategory::numeric) throw;
    warnings.push_back(std::string("tail law (") + std::string(to_string(form)) + "): " + e.what());
    return nullptr;
  }
}

Outcome cmd_stablefit(const Options& o) {
  const Input in = load(o);
  const Series s = analysed(in, o);
  const StableFit fit = fit_mcculloch(s);

  Outcome out;
  Report& r = out.report;
  r.input_digest = in.digest;
  r.warnings = in.warnings;
  r.warnings.insert(r.warnings.end(), fit.warnings.begin(), fit.warnings.end());
  r.results["n"] = s.size();
  r.results["s0"] = params_json(fit.s0);
  r.results["s1"] = params_json(fit.s1);
  r.results["quantiles"] = json{{"q05", fit.stats.q05}, {"q25", fit.stats.q25}, {"q50", fit.stats.q50},
                                {"q75", fit.stats.q75}, {"q95", fit.stats.q95}, {"nu_alpha", fit.stats.nu_alpha},
                                {"nu_beta", fit.stats.nu_beta}};
  r.results["alpha_clipped"] = fit.alpha_clipped;
  r.results["beta_clipped"] = fit.beta_clipped;
  r.results["tail_standard"] = tail_json(fit.s0, TailPrefactor::standard, r.warnings);
  r.results["tail_printed"] = tail_json(fit.s0, TailPrefactor::printed, r.warnings);

  // fitted density over the central 98% of the sample
  std::vector<double> sorted(s.values().begin(), s.values().end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = quantile_sorted(sorted, 0.01), hi = quantile_sorted(sorted, 0.99);
  const bool has_tail = fit.s0.alpha < 2.0;
  CsvTable csv({"x", "pdf", "tail_standard", "tail_printed"});
  constexpr std::size_t points = 201;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    const double nan = std::nan("");
    const bool tail = has_tail && x > 0.0 && fit.s0.beta > -1.0;
    csv.add_row({x, stable_pdf(fit.s0, x), tail ? stable_tail(fit.s0, x, TailPrefactor::standard) : nan,
                 tail ? stable_tail(fit.s0, x, TailPrefactor::printed) : nan});
  }
  out.files.push_back({"", csv.str()});
  return out;
}

Outcome cmd_simulate(const Options& o) {
  require_seed("simulate", o);
  Outcome out;
  Report& r = out.report;
  r.input_digest = sha256_hex(to_params("simulate", o).dump());
  std::optional<Series> values, prices;
  if (o.kind == "white-noise") {
    values = white_noise(o.n, o.seed);
  } else if (o.kind == "stable-noise") {
    values = sample_stable(stable_params(o), o.n, o.seed);
  } else if (o.kind == "walk") {
    if (o.steps < 1) throw CliError{usage_error, "--steps must be at least 1"};
    values = stable_walk(WalkSpec{o.start, o.steps, stable_params(o), o.seed});
    if (o.prices) prices = prices_from_returns(*values, o.start_price);
  } else {
    throw CliError{usage_error, "--kind must be white-noise, stable-noise or walk"};
  }
  r.results["summary"] = stats_json(summarize(*values));
  CsvTable csv(prices ? std::vector<std::string>{"t", "value", "price"} : std::vector<std::string>{"t", "value"});
  for (std::size_t t = 0; t < values->size(); ++t) {
    if (prices)
      csv.add_row({static_cast<double>(t), (*values)[t], (*prices)[t]});
    else
      csv.add_row({static_cast<double>(t), (*values)[t]});
  }
  out.files.push_back({"", csv.str()});
  return out;
}

Outcome dispatch(const std::string& command, const Options& o) {
  if (std::find(series_names.begin(), series_names.end(), o.series) == series_names.end())
    throw CliError{usage_error, "--series must be one of close, open, returns, log-returns, W, L, D"};
  Outcome out;
  if (command == "describe") out = cmd_describe(o);
  else if (command == "kde") out = cmd_kde(o);
  else if (command == "acf") out = cmd_acf(o);
  else if (command == "hurst") out = cmd_hurst(o);
  else if (command == "stablefit") out = cmd_stablefit(o);
  else if (command == "simulate") out = cmd_simulate(o);
  else throw CliError{usage_error, "unknown command '" + command + "'"};
  out.report.command = command;
  out.report.parameters = to_params(command, o);
  return out;
}

void emit(Outcome& outcome, const Output& where, std::ostream& out) {
  for (auto& f : outcome.files) {
    f.name = data_file_name(outcome.report.command, outcome.report.input_digest, f.name);
    outcome.report.data_files.push_back(f.name);
  }
  fs::create_directories(where.data_dir);
  for (const auto& f : outcome.files) write_file(fs::path(where.data_dir) / f.name, f.contents);
  const std::string text = outcome.report.to_json().dump(2) + "\n";
  if (where.out.empty() || where.out == "-")
    out << text;
  else
    write_file(where.out, text);
}

void add_input_flags(CLI::App* sub, Options& o) {
  sub->add_option("--input,-i", o.input, "OHLC CSV file (or any CSV with --value-col)");
  sub->add_option("--value-col", o.value_col, "Analyse this single column instead of an OHLC table");
  sub->add_option("--date-col", o.date_col, "Date column name")->capture_default_str();
  sub->add_option("--open-col", o.open_col, "Open column name")->capture_default_str();
  sub->add_option("--close-col", o.close_col, "Close column name")->capture_default_str();
  sub->add_option("--date-format", o.date_format, "Extra accepted date format, strftime syntax");
  sub->add_flag("--lenient", o.lenient, "Skip malformed rows with a warning instead of failing");
}

void add_series_flags(CLI::App* sub, Options& o) {
  sub->add_option("--series", o.series, "close, open, returns, log-returns, W, L or D")->capture_default_str();
  sub->add_flag("--normalize", o.normalize, "Centre and scale to unit sample sd");
}

void add_seed(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Random seed")->each([&o](const std::string&) { o.has_seed = true; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractal and heavy-tail analysis of daily market series", "fractalis"};
  app.set_version_flag("--version", FRACTALIS_VERSION);
  app.require_subcommand(0, 1);
  app.fallthrough();

  Options o;
  Output where;
  std::string replay;
  app.add_option("--out,-o", where.out, "Write the JSON report here instead of stdout");
  app.add_option("--data-dir", where.data_dir, "Directory for CSV data files")->capture_default_str();
  app.add_option("--replay", replay, "Re-run the command recorded in a report");

  auto* describe = app.add_subcommand("describe", "Summary statistics of the seven derived series");
  add_input_flags(describe, o);
  add_seed(describe, o);

  auto* kde = app.add_subcommand("kde", "Kernel density estimate");
  add_input_flags(kde, o);
  add_series_flags(kde, o);
  add_seed(kde, o);
  kde->add_option("--bandwidth", o.bandwidth, "Fixed bandwidth; default Silverman's rule");
  kde->add_option("--kernel", o.kernel, "gaussian or epanechnikov")->capture_default_str();
  kde->add_option("--grid-points", o.grid_points, "Evaluation points")->capture_default_str();
  kde->add_flag("--compare-noise", o.compare_noise, "Also estimate seeded Gaussian white noise of the same length");

  auto* acf = app.add_subcommand("acf", "Autocorrelation function");
  add_input_flags(acf, o);
  add_series_flags(acf, o);
  add_seed(acf, o);
  acf->add_option("--max-lag", o.max_lag, "Largest lag; default N-1");

  auto* hurst_cmd = app.add_subcommand("hurst", "Rescaled-range Hurst exponent");
  add_input_flags(hurst_cmd, o);
  add_series_flags(hurst_cmd, o);
  add_seed(hurst_cmd, o);
  hurst_cmd->add_option("--scales", o.scales, "dyadic, log, or a list such as 8,16,32")->capture_default_str();
  hurst_cmd->add_option("--min-scale", o.min_scale, "Smallest block length")->capture_default_str();
  hurst_cmd->add_option("--max-scale", o.max_scale, "Largest block length; default N/2");
  hurst_cmd->add_flag("--sweep", o.sweep, "Also refit H for growing upper cutoffs");

  auto* fit = app.add_subcommand("stablefit", "Quantile fit of an alpha-stable law and its power-law tail");
  add_input_flags(fit, o);
  add_series_flags(fit, o);
  add_seed(fit, o);

  auto* sim = app.add_subcommand("simulate", "Generate white noise, stable noise or a stable-step walk");
  add_seed(sim, o);
  sim->add_option("--kind", o.kind, "white-noise, stable-noise or walk")->capture_default_str();
  sim->add_option("--n", o.n, "Sample size for the noise kinds")->capture_default_str();
  sim->add_option("--steps", o.steps, "Walk steps")->capture_default_str();
  sim->add_option("--alpha", o.alpha, "Stability")->capture_default_str();
  sim->add_option("--beta", o.beta, "Skewness")->capture_default_str();
  sim->add_option("--gamma", o.gamma, "Scale")->capture_default_str();
  sim->add_option("--delta", o.delta, "Location")->capture_default_str();
  sim->add_option("--parameterization", o.parameterization, "S0 or S1")->capture_default_str();
  sim->add_option("--start", o.start, "Walk start value")->capture_default_str();
  sim->add_flag("--prices", o.prices, "Add a price path, the cumulative product of the walk");
  sim->add_option("--start-price", o.start_price, "First price of that path")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? ok : usage_error;
  }

  try {
    std::string command;
    if (!replay.empty()) {
      if (!app.get_subcommands().empty()) throw CliError{usage_error, "--replay takes no subcommand"};
      json report;
      try {
        report = json::parse(read_file(replay));
        command = report.at("command").get<std::string>();
        o = from_params(report.at("parameters"));
      } catch (const json::exception& e) {
        throw CliError{input_error, "'" + replay + "' is not a fractalis report: " + e.what()};
      }
      Outcome outcome = dispatch(command, o);
      const std::string recorded = report.value("input_digest", "");
      if (command != "simulate" && recorded != outcome.report.input_digest)
        throw CliError{input_error, "input '" + o.input + "' has changed since the report was written"};
      emit(outcome, where, out);
      return ok;
    }
    if (app.get_subcommands().empty()) {
      err << app.help();
      return usage_error;
    }
    command = app.get_subcommands().front()->get_name();
    Outcome outcome = dispatch(command, o);
    emit(outcome, where, out);
    return ok;
  } catch (const CliError& e) {
    err << "fractalis: " << e.message << "\n";
    return e.exit_code;
  } catch (const Error& e) {
    err << "fractalis: " << e.what() << "\n";
    switch (category(e.code())) {
      case ErrorCategory::input: return input_error;
      case ErrorCategory::numeric: return numeric_failure;
      case ErrorCategory::precondition: return precondition_failure;
    }
    return numeric_failure;
  } catch (const fs::filesystem_error& e) {
    err << "fractalis: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace fractalis::cli
