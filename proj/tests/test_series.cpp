#include <cmath>
#include <random>

#include "doctest.h"
#include "fractalis/error.hpp"
#include "fractalis/series.hpp"
#include "oracles.hpp"

using namespace fractalis;

namespace {

std::vector<double> vec(const Series& s) { return {s.values().begin(), s.values().end()}; }

Series random_positive(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(gen);
  return Series(v);
}

Date day(int y, unsigned m, unsigned d) {
  return std::chrono::sys_days{std::chrono::year{y} / std::chrono::month{m} / std::chrono::day{d}};
}

}  // namespace

TEST_CASE("series invariants") {
  CHECK_THROWS_AS(Series(std::vector<double>{}), Error);
  CHECK_THROWS_AS(Series({1.0, NAN}), Error);
  CHECK_THROWS_AS(Series({1.0, INFINITY}), Error);
  CHECK_THROWS_AS(Series({1.0, 2.0}, {day(2020, 1, 2), day(2020, 1, 1)}), Error);
  CHECK_THROWS_AS(Series({1.0, 2.0}, {day(2020, 1, 1), day(2020, 1, 1)}), Error);
  CHECK_THROWS_AS(Series({1.0, 2.0}, {day(2020, 1, 1)}), Error);
  const Series s({1.0, 2.0}, {day(2020, 1, 1), day(2020, 1, 3)}, "x");
  CHECK(s.size() == 2);
  CHECK(s.name() == "x");
  CHECK(format_iso(s.labels()->back()) == "2020-01-03");
}

TEST_CASE("returns") {
  CHECK(vec(returns(Series({5.0, 5.0, 5.0}))) == std::vector<double>{1.0, 1.0});
  const auto r = vec(returns(Series({100.0, 110.0, 99.0})));
  CHECK(r[0] == doctest::Approx(1.1).epsilon(1e-15));
  CHECK(r[1] == doctest::Approx(0.9).epsilon(1e-15));

  try {
    returns(Series({1.0, 0.0, 2.0}));
    FAIL("expected NonPositiveValue");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveValue);
  }
  try {
    returns(Series({1.0}));
    FAIL("expected TooShort");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooShort);
  }

  // labels drop the first date
  const Series y({1.0, 2.0, 4.0}, {day(2020, 1, 1), day(2020, 1, 2), day(2020, 1, 6)});
  const Series ry = returns(y);
  REQUIRE(ry.labels());
  CHECK(ry.labels()->front() == day(2020, 1, 2));
  CHECK(ry.labels()->size() == 2);
}

TEST_CASE("returns reconstruct prices by cumulative product") {
  const Series y = random_positive(500, 7);
  const auto r = vec(returns(y));
  double p = y[0];
  for (std::size_t n = 0; n < r.size(); ++n) {
    p *= r[n];
    CHECK(std::abs(p - y[n + 1]) <= 1e-12 * y[n + 1]);
  }
}

TEST_CASE("log returns") {
  const double e = std::exp(1.0);
  const auto r = vec(log_returns(Series({1.0, e, e * e})));
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(vec(log_returns(Series({3.0, 3.0, 3.0}))) == std::vector<double>{0.0, 0.0});

  const Series y = random_positive(1000, 11);
  const auto lr = vec(log_returns(y));
  const auto rr = vec(returns(y));
  for (std::size_t i = 0; i < lr.size(); ++i) CHECK(std::abs(lr[i] - std::log(rr[i])) <= 1e-15);
}

TEST_CASE("differences") {
  CHECK(vec(diff_within(Series({1.0, 4.0, 9.0}))) == std::vector<double>{3.0, 5.0});
  CHECK(vec(diff_within(Series({2.0, 2.0, 2.0}))) == std::vector<double>{0.0, 0.0});
  CHECK(vec(diff_lagged(Series({1.0, 2.0, 3.0}), Series({10.0, 20.0, 30.0}))) == std::vector<double>{-8.0, -17.0});
  CHECK(vec(diff_same_day(Series({10.0, 20.0}), Series({9.0, 23.0}))) == std::vector<double>{1.0, -3.0});

  const Series y = random_positive(300, 3);
  CHECK(vec(diff_lagged(y, y)) == vec(diff_within(y)));
  const Series zero = diff_same_day(y, y);
  for (double v : zero.values()) CHECK(v == 0.0);

  // cumulative sum of W recovers y - y[0]
  const auto w = vec(diff_within(Series({1.0, 4.0, 9.0, 7.0, 7.5})));
  double acc = 0.0;
  const std::vector<double> expect{3.0, 8.0, 6.0, 6.5};
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    CHECK(acc == expect[i]);
  }

  CHECK_THROWS_AS(diff_lagged(Series({1.0, 2.0}), Series({1.0, 2.0, 3.0})), Error);
  CHECK_THROWS_AS(diff_same_day(Series({1.0, 2.0}), Series({1.0})), Error);
}

TEST_CASE("L = W - D on integer-valued prices") {
  // integer-valued doubles keep every difference exact
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> u(1000, 9000);
  std::vector<double> x(200), y(200);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = u(gen);
    y[i] = u(gen);
  }
  const auto l = vec(diff_lagged(Series(x), Series(y)));
  const auto w = vec(diff_within(Series(y)));
  const auto d = vec(diff_same_day(Series(y), Series(x)));
  for (std::size_t n = 0; n < l.size(); ++n) CHECK(l[n] == w[n] - d[n + 1]);
}

TEST_CASE("normalize") {
  // sample sd: sd(0, 2) = sqrt(2)
  const auto z = vec(normalize(Series({0.0, 2.0})));
  CHECK(z[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const Series s = random_positive(1000, 21);
  const Series n1 = normalize(s);
  CHECK(std::abs(mean(n1.values())) <= 1e-12);
  CHECK(std::abs(sample_sd(n1.values()) - 1.0) <= 1e-12);

  const auto n2 = vec(normalize(n1));
  for (std::size_t i = 0; i < n2.size(); ++i) CHECK(std::abs(n2[i] - n1[i]) <= 1e-12);

  for (double a : {3.5, -0.25}) {
    std::vector<double> t(s.values().begin(), s.values().end());
    for (double& v : t) v = a * v + 17.0;
    const auto nt = vec(normalize(Series(t)));
    const double sign = a > 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < nt.size(); ++i) CHECK(std::abs(nt[i] - sign * n1[i]) <= 1e-12);
  }

  try {
    normalize(Series({4.0, 4.0, 4.0}));
    FAIL("expected ZeroVariance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVariance);
  }
}

TEST_CASE("summarize") {
  const SummaryStats a = summarize(Series({1.0, 2.0, 3.0}));
  CHECK(a.mean == 2.0);
  CHECK(a.quantiles[2] == 2.0);
  CHECK(a.sd == doctest::Approx(1.0));
  CHECK(a.n == 3);

  const SummaryStats one = summarize(Series({4.5}));
  CHECK(one.sd == 0.0);
  for (double q : one.quantiles) CHECK(q == 4.5);

  const Series s = random_positive(1000, 99);
  const std::vector<double> v = vec(s);
  const SummaryStats st = summarize(s);
  CHECK(std::abs(st.mean - oracle::two_pass_mean(v)) <= 1e-12);
  CHECK(std::abs(st.sd - oracle::two_pass_sd(v)) <= 1e-12);
  CHECK(st.quantiles[0] == *std::min_element(v.begin(), v.end()));
  CHECK(st.quantiles[4] == *std::max_element(v.begin(), v.end()));
  for (std::size_t i = 1; i < 5; ++i) CHECK(st.quantiles[i] >= st.quantiles[i - 1]);
}

TEST_CASE("type 7 quantiles") {
  const std::vector<double> sorted{1.0, 2.0, 3.0, 4.0};
  CHECK(quantile_sorted(sorted, 0.25) == doctest::Approx(1.75));
  CHECK(quantile_sorted(sorted, 0.5) == doctest::Approx(2.5));
  CHECK(quantile_sorted(sorted, 1.0) == 4.0);
}
