#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fractalis/autocorr.hpp"
#include "fractalis/density.hpp"
#include "fractalis/error.hpp"
#include "fractalis/ingest.hpp"
#include "fractalis/rescaled_range.hpp"
#include "fractalis/simulate.hpp"
#include "fractalis/stable.hpp"

namespace py = pybind11;
using namespace fractalis;

namespace {

Series as_series(const std::vector<double>& xs) { return Series(xs); }

std::vector<double> as_list(const Series& s) { return {s.values().begin(), s.values().end()}; }

py::dict stats_dict(const SummaryStats& s) {
  py::dict d;
  d["n"] = s.n;
  d["mean"] = s.mean;
  d["sd"] = s.sd;
  d["quantiles"] = s.quantiles;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractal and heavy-tail analysis of daily market series";

  static py::exception<Error> error(m, "FractalisError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  // series
  m.def("returns", [](const std::vector<double>& y) { return as_list(returns(as_series(y))); });
  m.def("log_returns", [](const std::vector<double>& y) { return as_list(log_returns(as_series(y))); });
  m.def("diff_within", [](const std::vector<double>& y) { return as_list(diff_within(as_series(y))); });
  m.def("diff_lagged", [](const std::vector<double>& x, const std::vector<double>& y) {
    return as_list(diff_lagged(as_series(x), as_series(y)));
  }, py::arg("open"), py::arg("close"), "L[n] = open[n] - close[n-1]");
  m.def("diff_same_day", [](const std::vector<double>& y, const std::vector<double>& x) {
    return as_list(diff_same_day(as_series(y), as_series(x)));
  }, py::arg("close"), py::arg("open"), "D[n] = close[n] - open[n]");
  m.def("normalize", [](const std::vector<double>& s) { return as_list(normalize(as_series(s))); });
  m.def("summarize", [](const std::vector<double>& s) { return stats_dict(summarize(as_series(s))); });

  // ingest
  m.def("read_ohlc", [](const std::string& text, bool lenient) {
    const auto parsed = parse_csv_text(text, {}, lenient ? ParseMode::lenient : ParseMode::strict);
    py::dict d;
    std::vector<std::string> dates;
    for (const auto& r : parsed.table.rows()) dates.push_back(format_iso(r.date));
    d["date"] = dates;
    d["open"] = as_list(opening(parsed.table));
    d["close"] = as_list(closing(parsed.table));
    std::vector<py::tuple> rejected;
    for (const auto& issue : parsed.rejected) rejected.push_back(py::make_tuple(issue.line, issue.reason));
    d["rejected"] = rejected;
    return d;
  }, py::arg("text"), py::arg("lenient") = false, "Parse OHLC CSV text into date/open/close columns");

  // density
  m.def("bandwidth_silverman", [](const std::vector<double>& s) { return bandwidth_silverman(as_series(s)); });
  m.def("kde", [](const std::vector<double>& sample, std::optional<double> h, const std::string& kernel,
                  std::size_t points) {
    const Series s = as_series(sample);
    const double bw = h ? *h : bandwidth_silverman(s);
    const auto r = kde(s, default_grid(s, bw, points), bw, kernel_from_string(kernel));
    return py::make_tuple(r.grid, r.density, r.bandwidth);
  }, py::arg("sample"), py::arg("bandwidth") = py::none(), py::arg("kernel") = "gaussian",
        py::arg("points") = 512, "Returns (grid, density, bandwidth)");

  // autocorrelation
  m.def("acf", [](const std::vector<double>& s, std::size_t max_lag) {
    return autocorrelation(as_series(s), max_lag).rho;
  }, py::arg("series"), py::arg("max_lag"));

  // rescaled range
  m.def("dyadic_scales", &dyadic_scales, py::arg("n"), py::arg("min_scale") = 8);
  m.def("rs_at_scale", [](const std::vector<double>& s, std::size_t m) {
    return rs_at_scale(as_series(s), m).mean_rs;
  }, py::arg("series"), py::arg("m"));
  m.def("hurst", [](const std::vector<double>& s, std::optional<std::vector<std::size_t>> scales) {
    const Series x = as_series(s);
    const auto est = hurst(x, scales ? *scales : dyadic_scales(x.size()));
    py::dict d;
    d["H"] = est.H;
    d["c"] = est.c;
    d["r_squared"] = est.r_squared;
    d["warnings"] = est.warnings;
    return d;
  }, py::arg("series"), py::arg("scales") = py::none());

  // stable laws
  py::enum_<Parameterization>(m, "Parameterization")
      .value("S0", Parameterization::S0)
      .value("S1", Parameterization::S1);
  py::class_<StableParams>(m, "StableParams")
      .def(py::init([](double a, double b, double g, double d, Parameterization p) {
             return StableParams{a, b, g, d, p};
           }),
           py::arg("alpha") = 2.0, py::arg("beta") = 0.0, py::arg("gamma") = 1.0, py::arg("delta") = 0.0,
           py::arg("parameterization") = Parameterization::S0)
      .def_readwrite("alpha", &StableParams::alpha)
      .def_readwrite("beta", &StableParams::beta)
      .def_readwrite("gamma", &StableParams::gamma)
      .def_readwrite("delta", &StableParams::delta)
      .def_readwrite("parameterization", &StableParams::parameterization)
      .def("__repr__", [](const StableParams& p) {
        return "StableParams(alpha=" + std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
               ", gamma=" + std::to_string(p.gamma) + ", delta=" + std::to_string(p.delta) + ", " +
               std::string(to_string(p.parameterization)) + ")";
      });
  m.def("to_s0", &to_s0);
  m.def("to_s1", &to_s1);
  m.def("stable_pdf", &stable_pdf, py::arg("params"), py::arg("x"));
  m.def("stable_cdf", &stable_cdf, py::arg("params"), py::arg("x"));
  m.def("stable_quantile", &stable_quantile, py::arg("params"), py::arg("p"));
  m.def("stable_tail", [](const StableParams& p, double x, bool printed) {
    return stable_tail(p, x, printed ? TailPrefactor::printed : TailPrefactor::standard);
  }, py::arg("params"), py::arg("x"), py::arg("printed") = false);
  m.def("fit_stable", [](const std::vector<double>& sample) {
    const StableFit f = fit_mcculloch(as_series(sample));
    py::dict d;
    d["s0"] = f.s0;
    d["s1"] = f.s1;
    d["nu_alpha"] = f.stats.nu_alpha;
    d["nu_beta"] = f.stats.nu_beta;
    d["warnings"] = f.warnings;
    return d;
  }, py::arg("sample"), "McCulloch quantile fit");
  m.def("sample_stable", [](const StableParams& p, std::size_t n, std::uint64_t seed) {
    return as_list(sample_stable(p, n, seed));
  }, py::arg("params"), py::arg("n"), py::arg("seed"));

  // simulation
  m.def("white_noise", [](std::size_t n, std::uint64_t seed) { return as_list(white_noise(n, seed)); },
        py::arg("n"), py::arg("seed"));
  m.def("stable_walk", [](const StableParams& noise, std::size_t steps, std::uint64_t seed, double start) {
    return as_list(stable_walk(WalkSpec{start, steps, noise, seed}));
  }, py::arg("noise"), py::arg("steps"), py::arg("seed"), py::arg("start") = 1.0);
}
