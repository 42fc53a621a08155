#include "fractalis/autocorr.hpp"

#include <cmath>
#include <span>
#include <string>

#include "fractalis/error.hpp"
#include "fractalis/parallel.hpp"

namespace fractalis {

double AcfResult::white_noise_band() const { return 1.96 / std::sqrt(static_cast<double>(n)); }

std::vector<double> autocovariance(const Series& s, std::size_t h_max) {
  const std::size_t n = s.size();
  if (h_max >= n)
    throw Error(ErrorCode::LagTooLarge,
                "maximum lag " + std::to_string(h_max) + " must be below series length " + std::to_string(n));
  const double m = mean(s.values());
  std::vector<double> dev(n);
  for (std::size_t t = 0; t < n; ++t) dev[t] = s[t] - m;

  std::vector<double> gamma(h_max + 1);
  const double inv_n = 1.0 / static_cast<double>(n);
  parallel_for(h_max + 1, [&](std::size_t h) {
    double acc = 0.0;
    for (std::size_t t = 0; t + h < n; ++t) acc += dev[t + h] * dev[t];
    gamma[h] = acc * inv_n;
  });
  if (!(gamma[0] > 0.0)) throw Error(ErrorCode::ZeroVariance, "series '" + s.name() + "' is constant");
  return gamma;
}

AcfResult autocorrelation(const Series& s, std::size_t h_max) {
  const auto gamma = autocovariance(s, h_max);
  AcfResult out;
  out.n = s.size();
  out.gamma0 = gamma[0];
  out.rho.resize(gamma.size());
  out.rho[0] = 1.0;
  for (std::size_t h = 1; h < gamma.size(); ++h) out.rho[h] = gamma[h] / gamma[0];
  return out;
}

SummaryStats acf_summary(const AcfResult& a) {
  if (a.rho.size() < 2) throw Error(ErrorCode::TooShort, "acf summary needs at least lag 1");
  return summarize(std::span<const double>(a.rho).subspan(1));
}

}  // namespace fractalis
