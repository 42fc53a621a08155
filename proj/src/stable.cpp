#include "fractalis/stable.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>

#include "fractalis/error.hpp"

namespace fractalis {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;

// Absolute accuracy target for the standardized density.
constexpr double pdf_abs_tol = 1e-8;
constexpr double quad_rel_tol = 1e-10;
// Error floors below which subdivision stops: the density floor is scaled by
// the prefactor at each call, the CDF floor is in probability units.
constexpr double pdf_chase_tol = 1e-4 * pdf_abs_tol;
constexpr double cdf_abs_tol = 1e-12 * pi;

boost::math::quadrature::tanh_sinh<double>& quadrature() {
  static boost::math::quadrature::tanh_sinh<double> q;
  return q;
}

// log g(theta) for the alpha != 1 representation, with x > zeta.
struct LogGAlpha {
  double alpha, theta0, lead, cos_term, expo;

  LogGAlpha(double a, double t0, double x_minus_zeta)
      : alpha(a), theta0(t0), expo(a / (a - 1.0)) {
    lead = expo * std::log(x_minus_zeta);
    cos_term = std::log(std::cos(a * t0)) / (a - 1.0);
  }

  double operator()(double th) const {
    const double c = std::cos(th);
    return lead + cos_term + std::log(c) / (alpha - 1.0) - expo * std::log(std::sin(alpha * (theta0 + th))) +
           std::log(std::cos(alpha * theta0 + (alpha - 1.0) * th));
  }
};

// log g(theta) for alpha == 1, beta > 0.
struct LogGCauchyLike {
  double beta, lead;

  LogGCauchyLike(double b, double x) : beta(b), lead(-pi * x / (2.0 * b) + std::log(2.0 / pi)) {}

  double operator()(double th) const {
    const double u = half_pi + beta * th;
    return lead + std::log(u) - std::log(std::cos(th)) + u * std::tan(th) / beta;
  }
};

// Angle in (a, b) where log g crosses zero: the peak of g exp(-g) and the
// half-way point of exp(-g). log g is monotone on the interval.
template <class LogG>
double peak_angle(const LogG& log_g, double a, double b, bool increasing) {
  double lo = a, hi = b;
  for (int i = 0; i < 200 && hi - lo > 4e-16 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double v = log_g(mid);
    const bool below = std::isnan(v) ? false : v < 0.0;
    if (below == increasing)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

// Tanh-sinh on [lo, hi], halving the interval where the error estimate is
// still too large (sharp peaks at the edge of the support).
template <class F>
void integrate_adaptive(const F& f, double lo, double hi, double abs_tol, int depth, Integral& out) {
  // slivers carry no mass at double precision (both integrands are <= 1)
  if (!(hi - lo > 1e-13 * (1.0 + std::abs(lo) + std::abs(hi)))) return;
  // the two-argument form sidesteps an endpoint assertion in Boost 1.74
  auto f2 = [&](double th, double) {
    const double v = f(th);
    return std::isnan(v) ? 0.0 : v;
  };
  double err = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  const double v = quadrature().integrate(f2, lo, hi, quad_rel_tol, &err, &l1, &levels);
  if (depth > 0 && err > std::max(quad_rel_tol * std::abs(v), abs_tol)) {
    const double mid = 0.5 * (lo + hi);
    Integral halves;
    integrate_adaptive(f, lo, mid, 0.5 * abs_tol, depth - 1, halves);
    integrate_adaptive(f, mid, hi, 0.5 * abs_tol, depth - 1, halves);
    // near a rounding-noise floor the halves do no better; keep the whole
    if (halves.error < err) {
      out.value += halves.value;
      out.error += halves.error;
      return;
    }
  }
  out.value += v;
  out.error += err;
}

// abs_tol bounds the error that is worth chasing on the whole of [a, b].
template <class F>
Integral integrate_split(const F& f, double a, double b, double split, double abs_tol) {
  Integral out;
  integrate_adaptive(f, a, split, 0.5 * abs_tol, 12, out);
  integrate_adaptive(f, split, b, 0.5 * abs_tol, 12, out);
  return out;
}

template <class LogG>
Integral density_integral(const LogG& log_g, double a, double b, bool increasing, double abs_tol) {
  const double split = peak_angle(log_g, a, b, increasing);
  auto h = [&](double th) {
    const double lg = log_g(th);
    if (std::isnan(lg)) return 0.0;
    return std::exp(lg - std::exp(lg));
  };
  return integrate_split(h, a, b, split, abs_tol);
}

template <class LogG>
Integral cdf_integral(const LogG& log_g, double a, double b, bool increasing) {
  const double split = peak_angle(log_g, a, b, increasing);
  auto h = [&](double th) {
    const double lg = log_g(th);
    if (std::isnan(lg)) return 0.0;
    return std::exp(-std::exp(lg));
  };
  return integrate_split(h, a, b, split, cdf_abs_tol);
}

void check_quadrature(const Integral& I, double prefactor, const char* what) {
  if (!std::isfinite(I.value) || (prefactor * I.error > 0.1 * pdf_abs_tol && I.error > 1e-7 * std::abs(I.value)))
    throw Error(ErrorCode::QuadratureFailure, std::string(what) + " integral did not reach tolerance (error estimate " +
                                                  std::to_string(prefactor * I.error) + ")");
}

double theta0_of(double alpha, double beta) {
  // exact at the totally skewed edges of the alpha < 1 family, where the
  // integration interval collapses
  if (alpha < 1.0 && std::abs(beta) == 1.0) return beta * half_pi;
  return std::atan(beta * std::tan(half_pi * alpha)) / alpha;
}

double pdf_alpha_ne_1(double alpha, double beta, double x) {
  const double zeta = -beta * std::tan(half_pi * alpha);
  if (x < zeta) return pdf_alpha_ne_1(alpha, -beta, -x);
  const double theta0 = theta0_of(alpha, beta);
  const double xz = x - zeta;
  if (xz <= 1e-14 * (1.0 + std::abs(zeta))) {
    return std::tgamma(1.0 + 1.0 / alpha) * std::cos(theta0) /
           (pi * std::pow(1.0 + zeta * zeta, 1.0 / (2.0 * alpha)));
  }
  if (!(half_pi + theta0 > 0.0)) return 0.0;  // beyond the support edge
  const LogGAlpha log_g(alpha, theta0, xz);
  const double prefactor = alpha / (pi * std::abs(alpha - 1.0) * xz);
  const Integral I = density_integral(log_g, -theta0, half_pi, alpha < 1.0, pdf_chase_tol / prefactor);
  check_quadrature(I, prefactor, "density");
  return prefactor * I.value;
}

double cdf_alpha_ne_1(double alpha, double beta, double x) {
  const double zeta = -beta * std::tan(half_pi * alpha);
  if (x < zeta) return 1.0 - cdf_alpha_ne_1(alpha, -beta, -x);
  const double theta0 = theta0_of(alpha, beta);
  const double xz = x - zeta;
  if (xz <= 1e-14 * (1.0 + std::abs(zeta))) return (half_pi - theta0) / pi;
  if (!(half_pi + theta0 > 0.0)) return alpha < 1.0 ? (half_pi - theta0) / pi : 1.0;
  const LogGAlpha log_g(alpha, theta0, xz);
  const Integral I = cdf_integral(log_g, -theta0, half_pi, alpha < 1.0);
  check_quadrature(I, 1.0 / pi, "distribution");
  if (alpha < 1.0) return std::clamp((half_pi - theta0) / pi + I.value / pi, 0.0, 1.0);
  return std::clamp(1.0 - I.value / pi, 0.0, 1.0);
}

double pdf_alpha_1(double beta, double x) {
  if (beta < 0.0) return pdf_alpha_1(-beta, -x);
  const LogGCauchyLike log_g(beta, x);
  const double prefactor = 1.0 / (2.0 * beta);
  const Integral I = density_integral(log_g, -half_pi, half_pi, true, pdf_chase_tol / prefactor);
  check_quadrature(I, prefactor, "density");
  return prefactor * I.value;
}

double cdf_alpha_1(double beta, double x) {
  if (beta < 0.0) return 1.0 - cdf_alpha_1(-beta, -x);
  const LogGCauchyLike log_g(beta, x);
  const Integral I = cdf_integral(log_g, -half_pi, half_pi, true);
  check_quadrature(I, 1.0 / pi, "distribution");
  return std::clamp(I.value / pi, 0.0, 1.0);
}

double standard_pdf(double alpha, double beta, double z) {
  if (alpha == 2.0) return std::exp(-0.25 * z * z) / std::sqrt(4.0 * pi);
  if (alpha == 1.0 && beta == 0.0) return 1.0 / (pi * (1.0 + z * z));
  return detail::stable_pdf_integral(alpha, beta, z);
}

double standard_cdf(double alpha, double beta, double z) {
  if (alpha == 2.0) return 0.5 * std::erfc(-z / 2.0);
  if (alpha == 1.0 && beta == 0.0) return 0.5 + std::atan(z) / pi;
  return detail::stable_cdf_integral(alpha, beta, z);
}

}  // namespace

namespace detail {

namespace {

// The alpha != 1 representation loses all precision as alpha -> 1. Inside
// this band the (continuous in S0) value is interpolated quadratically
// through alpha = 1 - h, 1, 1 + h.
constexpr double alpha_one_band = 1e-3;

template <class F>
double across_alpha_one(double alpha, const F& eval) {
  const double t = (alpha - 1.0) / alpha_one_band;
  const double fm = eval(1.0 - alpha_one_band), f0 = eval(1.0), fp = eval(1.0 + alpha_one_band);
  return f0 + 0.5 * t * (fp - fm) + 0.5 * t * t * (fp - 2.0 * f0 + fm);
}

double pdf_any(double alpha, double beta, double x) {
  if (alpha == 1.0) return beta == 0.0 ? 1.0 / (pi * (1.0 + x * x)) : pdf_alpha_1(beta, x);
  return pdf_alpha_ne_1(alpha, beta, x);
}

double cdf_any(double alpha, double beta, double x) {
  if (alpha == 1.0) return beta == 0.0 ? 0.5 + std::atan(x) / pi : cdf_alpha_1(beta, x);
  return cdf_alpha_ne_1(alpha, beta, x);
}

}  // namespace

double stable_pdf_integral(double alpha, double beta, double x) {
  if (alpha != 1.0 && std::abs(alpha - 1.0) < alpha_one_band)
    return std::max(0.0, across_alpha_one(alpha, [&](double a) { return pdf_any(a, beta, x); }));
  return pdf_any(alpha, beta, x);
}

double stable_cdf_integral(double alpha, double beta, double x) {
  if (alpha != 1.0 && std::abs(alpha - 1.0) < alpha_one_band)
    return std::clamp(across_alpha_one(alpha, [&](double a) { return cdf_any(a, beta, x); }), 0.0, 1.0);
  return cdf_any(alpha, beta, x);
}

double bilinear(const std::vector<double>& rows, const std::vector<double>& cols,
                const std::vector<std::vector<double>>& values, double r, double c) {
  auto locate = [](const std::vector<double>& nodes, double v) {
    v = std::clamp(v, nodes.front(), nodes.back());
    auto it = std::upper_bound(nodes.begin(), nodes.end(), v);
    std::size_t i = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    i = std::min(i, nodes.size() - 2);
    const double t = (v - nodes[i]) / (nodes[i + 1] - nodes[i]);
    return std::pair{i, t};
  };
  const auto [i, tr] = locate(rows, r);
  const auto [j, tc] = locate(cols, c);
  const double v00 = values[i][j], v01 = values[i][j + 1];
  const double v10 = values[i + 1][j], v11 = values[i + 1][j + 1];
  return (1 - tr) * ((1 - tc) * v00 + tc * v01) + tr * ((1 - tc) * v10 + tc * v11);
}

}  // namespace detail

std::string_view to_string(Parameterization p) { return p == Parameterization::S0 ? "S0" : "S1"; }

std::string_view to_string(TailPrefactor t) { return t == TailPrefactor::standard ? "standard" : "printed"; }

void validate(const StableParams& p) {
  const bool finite = std::isfinite(p.alpha) && std::isfinite(p.beta) && std::isfinite(p.gamma) &&
                      std::isfinite(p.delta);
  if (!finite || !(p.alpha > 0.0 && p.alpha <= 2.0) || !(std::abs(p.beta) <= 1.0) || !(p.gamma > 0.0))
    throw Error(ErrorCode::InvalidParams, "stable parameters out of range (alpha=" + std::to_string(p.alpha) +
                                              ", beta=" + std::to_string(p.beta) +
                                              ", gamma=" + std::to_string(p.gamma) + ")");
}

StableParams to_s0(const StableParams& p) {
  validate(p);
  if (p.parameterization == Parameterization::S0) return p;
  StableParams q = p;
  q.parameterization = Parameterization::S0;
  if (p.alpha == 1.0)
    q.delta = p.delta + p.beta * (2.0 / pi) * p.gamma * std::log(p.gamma);
  else if (p.alpha != 2.0)
    q.delta = p.delta + p.beta * p.gamma * std::tan(half_pi * p.alpha);
  return q;
}

StableParams to_s1(const StableParams& p) {
  validate(p);
  if (p.parameterization == Parameterization::S1) return p;
  StableParams q = p;
  q.parameterization = Parameterization::S1;
  if (p.alpha == 1.0)
    q.delta = p.delta - p.beta * (2.0 / pi) * p.gamma * std::log(p.gamma);
  else if (p.alpha != 2.0)
    q.delta = p.delta - p.beta * p.gamma * std::tan(half_pi * p.alpha);
  return q;
}

double stable_pdf(const StableParams& p, double x) {
  const StableParams q = to_s0(p);
  return standard_pdf(q.alpha, q.beta, (x - q.delta) / q.gamma) / q.gamma;
}

double stable_cdf(const StableParams& p, double x) {
  const StableParams q = to_s0(p);
  return standard_cdf(q.alpha, q.beta, (x - q.delta) / q.gamma);
}

double stable_quantile(const StableParams& p, double prob) {
  if (!(prob > 0.0 && prob < 1.0)) throw Error(ErrorCode::InvalidParams, "probability must lie in (0, 1)");
  const StableParams q = to_s0(p);
  auto f = [&](double z) { return standard_cdf(q.alpha, q.beta, z) - prob; };
  double lo = -1.0, hi = 1.0;
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; flo > 0.0 && i < 200; ++i) {
    hi = lo;
    fhi = flo;
    lo *= 2.0;
    flo = f(lo);
  }
  for (int i = 0; fhi < 0.0 && i < 200; ++i) {
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    fhi = f(hi);
  }
  if (flo == 0.0) return q.delta + q.gamma * lo;
  if (fhi == 0.0) return q.delta + q.gamma * hi;
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                                        boost::math::tools::eps_tolerance<double>(48), iters);
  return q.delta + q.gamma * 0.5 * (a + b);
}

namespace {

double tail_prefactor(const StableParams& p, TailPrefactor form) {
  if (p.alpha == 2.0) throw Error(ErrorCode::GaussianHasNoTailLaw, "alpha = 2 has Gaussian tails");
  const double s = std::sin(half_pi * p.alpha);
  if (form == TailPrefactor::standard)
    return p.alpha * (1.0 + p.beta) * std::tgamma(p.alpha) * s / pi * std::pow(p.gamma, p.alpha);
  return p.alpha * (1.0 + p.beta) * std::tgamma(p.alpha) / (pi * s);
}

}  // namespace

double stable_tail(const StableParams& p, double x, TailPrefactor form) {
  validate(p);
  if (!(x > 0.0)) throw Error(ErrorCode::InvalidParams, "tail asymptote needs x > 0");
  return tail_prefactor(p, form) * std::pow(x, -(1.0 + p.alpha));
}

double TailLaw::operator()(double x) const { return C * std::pow(x, -exponent); }

TailLaw tail_from_fit(const StableParams& p, TailPrefactor form) {
  validate(p);
  TailLaw law;
  law.C = tail_prefactor(p, form);
  if (!(law.C > 0.0))
    throw Error(ErrorCode::InvalidParams, "beta = -1 leaves no power-law right tail");
  law.exponent = 1.0 + p.alpha;
  law.valid_from = std::abs(p.delta) + 10.0 * p.gamma;
  law.form = form;
  return law;
}

StableFit fit_mcculloch(const Series& sample) {
  if (sample.size() < 100)
    throw Error(ErrorCode::SampleTooSmall, "quantile fit needs at least 100 observations, got " +
                                               std::to_string(sample.size()));
  std::vector<double> sorted(sample.values().begin(), sample.values().end());
  std::sort(sorted.begin(), sorted.end());
  StableFit fit;
  auto& st = fit.stats;
  st.q05 = quantile_sorted(sorted, 0.05);
  st.q25 = quantile_sorted(sorted, 0.25);
  st.q50 = quantile_sorted(sorted, 0.50);
  st.q75 = quantile_sorted(sorted, 0.75);
  st.q95 = quantile_sorted(sorted, 0.95);
  const double iqr = st.q75 - st.q25;
  const double spread90 = st.q95 - st.q05;
  if (!(iqr > 0.0) || !(spread90 > 0.0))
    throw Error(ErrorCode::DegenerateQuantiles, "sample quantiles do not spread");
  st.nu_alpha = spread90 / iqr;
  st.nu_beta = (st.q95 + st.q05 - 2.0 * st.q50) / spread90;

  const auto& t = detail::mcculloch_tables();
  const double sign = st.nu_beta < 0.0 ? -1.0 : 1.0;
  double va = st.nu_alpha;
  if (va < t.nu_alpha_nodes.front()) {
    va = t.nu_alpha_nodes.front();
    fit.alpha_clipped = true;
    fit.warnings.push_back("nu_alpha below the Gaussian value; alpha set to 2");
  } else if (va > t.nu_alpha_nodes.back()) {
    va = t.nu_alpha_nodes.back();
    fit.alpha_clipped = true;
    fit.warnings.push_back("nu_alpha beyond the table; alpha clipped to the 0.5 floor");
  }
  const double vb = std::min(std::abs(st.nu_beta), t.nu_beta_nodes.back());

  double alpha = std::clamp(detail::bilinear(t.nu_alpha_nodes, t.nu_beta_nodes, t.alpha, va, vb), 0.5, 2.0);
  double beta_abs = detail::bilinear(t.nu_alpha_nodes, t.nu_beta_nodes, t.beta, va, vb);
  if (beta_abs > 1.0) {
    beta_abs = 1.0;
    fit.beta_clipped = true;
    fit.warnings.push_back("beta clipped to the [-1, 1] boundary");
  }
  beta_abs = std::max(beta_abs, 0.0);
  if (alpha >= 2.0) {
    alpha = 2.0;
    beta_abs = 0.0;  // skewness is not identified for the Gaussian member
  }

  const double nu_gamma = detail::bilinear(t.alpha_nodes, t.beta_nodes, t.nu_gamma, alpha, beta_abs);
  const double nu_delta = sign * detail::bilinear(t.alpha_nodes, t.beta_nodes, t.nu_delta, alpha, beta_abs);
  const double gamma = iqr / nu_gamma;

  fit.s0 = StableParams{alpha, sign * beta_abs, gamma, st.q50 + gamma * nu_delta, Parameterization::S0};
  fit.s1 = to_s1(fit.s0);
  return fit;
}

std::vector<double> sample_stable(const StableParams& p, std::size_t n, Rng& rng) {
  const StableParams q = to_s0(p);
  const double a = q.alpha, b = q.beta;
  std::vector<double> out(n);
  if (a == 1.0) {
    for (auto& x : out) {
      const double v = pi * (rng.uniform() - 0.5);
      const double w = rng.exponential();
      const double u = half_pi + b * v;
      const double z = (2.0 / pi) * (u * std::tan(v) - b * std::log(half_pi * w * std::cos(v) / u));
      x = q.gamma * z + q.delta;
    }
    return out;
  }
  const double tan_a = std::tan(half_pi * a);
  const double shift = a == 2.0 ? 0.0 : -b * tan_a;  // S1 -> S0 for the standardized variate
  const double theta0 = std::atan(b * tan_a) / a;
  const double scale = std::pow(1.0 + b * b * tan_a * tan_a, 1.0 / (2.0 * a));
  for (auto& x : out) {
    const double v = pi * (rng.uniform() - 0.5);
    const double w = rng.exponential();
    const double av = a * (v + theta0);
    const double z = scale * std::sin(av) / std::pow(std::cos(v), 1.0 / a) *
                     std::pow(std::cos(v - av) / w, (1.0 - a) / a);
    x = q.gamma * (z + shift) + q.delta;
  }
  return out;
}

Series sample_stable(const StableParams& p, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::TooShort, "sample size must be at least 1");
  Rng rng(seed);
  return Series(sample_stable(p, n, rng), "stable_sample");
}

}  // namespace fractalis
