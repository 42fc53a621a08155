#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fractalis/random.hpp"
#include "fractalis/series.hpp"

namespace fractalis {

/// S0 is continuous in all parameters (Nolan's "0" parameterization, a
/// location-scale family); S1 is the classical characteristic-function form.
enum class Parameterization { S0, S1 };

std::string_view to_string(Parameterization p);

struct StableParams {
  double alpha = 2.0;  // stability, (0, 2]
  double beta = 0.0;   // skewness, [-1, 1]
  double gamma = 1.0;  // scale, > 0
  double delta = 0.0;  // location
  Parameterization parameterization = Parameterization::S0;
};

/// Throws InvalidParams unless 0 < alpha <= 2, |beta| <= 1, gamma > 0 and
/// all fields are finite.
void validate(const StableParams& p);

StableParams to_s0(const StableParams& p);
StableParams to_s1(const StableParams& p);

/// Density. Gaussian (alpha = 2) and Cauchy (alpha = 1, beta = 0) use
/// closed forms; every other case integrates the Zolotarev/Nolan
/// representation of the inverse Fourier transform over a finite angle
/// interval. Throws QuadratureFailure when the error estimate misses the
/// 1e-8 absolute target on the standardized scale.
double stable_pdf(const StableParams& p, double x);
double stable_cdf(const StableParams& p, double x);
/// Inverse CDF by bracketed root finding on stable_cdf.
double stable_quantile(const StableParams& p, double prob);

enum class TailPrefactor {
  /// C_alpha = Gamma(alpha) sin(pi alpha / 2) / pi, scaled by gamma^alpha.
  standard,
  /// C_alpha = Gamma(alpha) / (pi sin(pi alpha / 2)) with no scale factor;
  /// reproduces the published power-law constants for comparison.
  printed,
};

std::string_view to_string(TailPrefactor t);

/// Asymptotic density alpha (1 + beta) C_alpha x^-(1 + alpha) for large
/// positive x. Throws GaussianHasNoTailLaw for alpha = 2.
double stable_tail(const StableParams& p, double x, TailPrefactor form = TailPrefactor::standard);

/// f(x) ~ C / x^exponent.
struct TailLaw {
  double C = 0.0;
  double exponent = 0.0;    // 1 + alpha
  double valid_from = 0.0;  // |delta| + 10 gamma, where the asymptote starts to be useful
  TailPrefactor form = TailPrefactor::standard;

  double operator()(double x) const;
};

TailLaw tail_from_fit(const StableParams& p, TailPrefactor form = TailPrefactor::standard);

struct QuantileStats {
  double q05 = 0.0, q25 = 0.0, q50 = 0.0, q75 = 0.0, q95 = 0.0;
  double nu_alpha = 0.0;  // (q95 - q05) / (q75 - q25)
  double nu_beta = 0.0;   // (q95 + q05 - 2 q50) / (q95 - q05)
};

struct StableFit {
  StableParams s0;
  StableParams s1;
  QuantileStats stats;
  bool alpha_clipped = false;
  bool beta_clipped = false;
  std::vector<std::string> warnings;
};

/// McCulloch's quantile estimator: alpha and beta from interpolated lookup
/// tables indexed by nu_alpha and nu_beta, then scale and location from the
/// companion tables. Needs at least 100 observations.
StableFit fit_mcculloch(const Series& sample);

/// Chambers-Mallows-Stuck variates.
std::vector<double> sample_stable(const StableParams& p, std::size_t n, Rng& rng);
Series sample_stable(const StableParams& p, std::size_t n, std::uint64_t seed);

namespace detail {

/// Standardized S0 density/CDF through the integral representation only,
/// with no closed-form shortcuts. Exposed for tests.
double stable_pdf_integral(double alpha, double beta, double x);
double stable_cdf_integral(double alpha, double beta, double x);

/// Lookup tables used by fit_mcculloch. Rows follow `alpha_nodes` /
/// `nu_alpha_nodes`, columns `beta_nodes` / `nu_beta_nodes`.
struct McCullochTables {
  std::vector<double> nu_alpha_nodes;
  std::vector<double> nu_beta_nodes;
  std::vector<std::vector<double>> alpha;  // psi1(nu_alpha, nu_beta)
  std::vector<std::vector<double>> beta;   // psi2(nu_alpha, nu_beta)
  std::vector<double> alpha_nodes;
  std::vector<double> beta_nodes;
  std::vector<std::vector<double>> nu_gamma;  // (q75 - q25) / gamma
  std::vector<std::vector<double>> nu_delta;  // (delta0 - q50) / gamma
};

const McCullochTables& mcculloch_tables();

/// Bilinear interpolation on a rectilinear grid, clamped to its edges.
double bilinear(const std::vector<double>& rows, const std::vector<double>& cols,
                const std::vector<std::vector<double>>& values, double r, double c);

}  // namespace detail

}  // namespace fractalis
