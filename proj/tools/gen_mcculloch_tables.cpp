// Regenerates src/mcculloch_tables.cpp from the stable quantile function.
//
//   gen_mcculloch_tables > src/mcculloch_tables.cpp
//
// The inverse tables use McCulloch's (1986) node layout. Each feasible node
// is solved by nested bisection: beta for the nu_beta target at fixed alpha,
// alpha for the nu_alpha target along that curve.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fractalis/stable.hpp"

using namespace fractalis;

namespace {

struct Ratios {
  double nu_alpha, nu_beta, nu_gamma, nu_delta;
};

Ratios ratios(double alpha, double beta) {
  const StableParams p{alpha, beta, 1.0, 0.0, Parameterization::S0};
  const double q05 = stable_quantile(p, 0.05), q25 = stable_quantile(p, 0.25), q50 = stable_quantile(p, 0.5),
               q75 = stable_quantile(p, 0.75), q95 = stable_quantile(p, 0.95);
  return {(q95 - q05) / (q75 - q25), (q95 + q05 - 2.0 * q50) / (q95 - q05), q75 - q25, -q50};
}

double nu_beta_of(double alpha, double beta) {
  const StableParams p{alpha, beta, 1.0, 0.0, Parameterization::S0};
  const double q05 = stable_quantile(p, 0.05), q50 = stable_quantile(p, 0.5), q95 = stable_quantile(p, 0.95);
  return (q95 + q05 - 2.0 * q50) / (q95 - q05);
}

constexpr double alpha_floor = 0.5;
constexpr int iterations = 30;

// beta in [0, 1] with nu_beta(alpha, beta) = target; nu_beta rises with beta.
// Returns a value above 1 (linear extrapolation) when the target exceeds the
// totally skewed ratio.
double solve_beta(double alpha, double target) {
  if (target <= 0.0) return 0.0;
  const double top = nu_beta_of(alpha, 1.0);
  if (target >= top) return target / top;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    (nu_beta_of(alpha, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// nu_alpha falls as alpha rises.
double solve_alpha(double target_a, double target_b) {
  auto nu_a = [&](double alpha) {
    const double beta = std::min(solve_beta(alpha, target_b), 1.0);
    return ratios(alpha, beta).nu_alpha;
  };
  double lo = alpha_floor, hi = 2.0;
  if (nu_a(lo) <= target_a) return lo;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    (nu_a(mid) > target_a ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void print_vector(const char* comment, const std::vector<double>& v) {
  std::printf("      // %s\n      {", comment);
  for (std::size_t i = 0; i < v.size(); ++i) std::printf("%s%.6f", i ? ", " : "", v[i]);
  std::printf("},\n");
}

void print_matrix(const char* comment, const std::vector<std::vector<double>>& m) {
  std::printf("      // %s\n      {\n", comment);
  for (const auto& row : m) {
    std::printf("          {");
    for (std::size_t j = 0; j < row.size(); ++j) std::printf("%s%.6f", j ? ", " : "", row[j]);
    std::printf("},\n");
  }
  std::printf("      },\n");
}

}  // namespace

int main() {
  const double gaussian_nu_alpha = ratios(2.0, 0.0).nu_alpha;
  std::vector<double> nu_alpha_nodes{gaussian_nu_alpha, 2.5, 2.6, 2.7, 2.8, 3.0, 3.2, 3.5,
                                     4.0, 5.0, 6.0, 8.0, 10.0, 15.0, 25.0};
  const std::vector<double> nu_beta_nodes{0.0, 0.1, 0.2, 0.3, 0.5, 0.7, 1.0};

  std::vector<std::vector<double>> alpha(nu_alpha_nodes.size(), std::vector<double>(nu_beta_nodes.size()));
  auto beta = alpha;
  for (std::size_t i = 1; i < nu_alpha_nodes.size(); ++i) {
    for (std::size_t j = 0; j < nu_beta_nodes.size(); ++j) {
      const double a = solve_alpha(nu_alpha_nodes[i], nu_beta_nodes[j]);
      alpha[i][j] = a;
      beta[i][j] = solve_beta(a, nu_beta_nodes[j]);
      std::fprintf(stderr, "nu_alpha=%g nu_beta=%g -> alpha=%.5f beta=%.5f\n", nu_alpha_nodes[i], nu_beta_nodes[j],
                   alpha[i][j], beta[i][j]);
    }
  }
  // The Gaussian row: alpha = 2 and beta carried over from the next row so
  // the interpolated skewness stays continuous.
  for (std::size_t j = 0; j < nu_beta_nodes.size(); ++j) {
    alpha[0][j] = 2.0;
    beta[0][j] = beta[1][j];
  }

  std::vector<double> alpha_nodes, beta_nodes{0.0, 0.25, 0.5, 0.75, 1.0};
  for (int k = 5; k <= 20; ++k) alpha_nodes.push_back(k / 10.0);
  std::vector<std::vector<double>> nu_gamma(alpha_nodes.size(), std::vector<double>(beta_nodes.size()));
  auto nu_delta = nu_gamma;
  for (std::size_t i = 0; i < alpha_nodes.size(); ++i) {
    for (std::size_t j = 0; j < beta_nodes.size(); ++j) {
      const Ratios r = ratios(alpha_nodes[i], beta_nodes[j]);
      nu_gamma[i][j] = r.nu_gamma;
      nu_delta[i][j] = r.nu_delta;
    }
  }

  std::printf("// Generated by tools/gen_mcculloch_tables; do not edit by hand.\n");
  std::printf("#include \"fractalis/stable.hpp\"\n\nnamespace fractalis::detail {\n\n");
  std::printf("const McCullochTables& mcculloch_tables() {\n  static const McCullochTables tables{\n");
  print_vector("nu_alpha nodes", nu_alpha_nodes);
  print_vector("nu_beta nodes", nu_beta_nodes);
  print_matrix("alpha(nu_alpha, nu_beta)", alpha);
  print_matrix("beta(nu_alpha, nu_beta); values above 1 are clipped by the fit", beta);
  print_vector("alpha nodes", alpha_nodes);
  print_vector("beta nodes", beta_nodes);
  print_matrix("nu_gamma(alpha, beta) = (q75 - q25) / gamma", nu_gamma);
  print_matrix("nu_delta(alpha, beta) = (delta0 - q50) / gamma", nu_delta);
  std::printf("  };\n  return tables;\n}\n\n}  // namespace fractalis::detail\n");
}
