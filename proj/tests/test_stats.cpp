#include <cmath>

#include "cpci/errors.hpp"
#include "cpci/special.hpp"
#include "cpci/stats.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cpci;

namespace {

// 97.5% quantile of Beta(0.5, 9.5): the Jeffreys upper bound for c = 0, m = 9.
// Produced by oracle::beta_quantile (bisection on the quadrature CDF).
constexpr double kUpperC0M9 = 0.23761009863289484;

}  // namespace

TEST_CASE("log_gamma against factorials and half-integers") {
  double fact = 1.0;
  for (int n = 1; n < 25; ++n) {
    CHECK(special::log_gamma(n) == doctest::Approx(std::log(fact)).epsilon(1e-14));
    fact *= n;
  }
  CHECK(special::log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  // lbeta(a, a) symmetric forms
  CHECK(special::log_beta(2.0, 3.0) == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-14));
  CHECK(std::fabs(special::log_beta(30.5, 20.5) - special::log_beta(20.5, 30.5)) < 1e-13);
  // log B(a, b) = log B(a, b+1) + log((a+b)/b) ties the small and large branches together
  for (double a : {0.5, 3.0, 12.0, 500.0})
    for (double b : {0.5, 9.5, 9.99, 10.0, 40.0, 9000.0})
      CHECK(std::fabs(special::log_beta(a, b) - (special::log_beta(a, b + 1.0) + std::log((a + b) / b))) < 1e-11);
}

TEST_CASE("incomplete beta closed forms") {
  for (double x : {0.0, 0.3, 1.0}) CHECK(std::fabs(regularized_incomplete_beta(x, 1, 1) - x) < 1e-12);
  for (double a : {0.5, 5.5, 50.5}) CHECK(std::fabs(regularized_incomplete_beta(0.5, a, a) - 0.5) < 1e-12);
  CHECK(std::fabs(regularized_incomplete_beta(0.25, 2, 1) - 0.0625) < 1e-12);
  for (double a : {0.5, 2.0, 7.5, 100.0, 1e4})
    for (double x : {0.01, 0.2, 0.5, 0.9, 0.9999}) {
      CHECK(std::fabs(regularized_incomplete_beta(x, a, 1.0) - std::pow(x, a)) < 1e-12);
      CHECK(std::fabs(regularized_incomplete_beta(x, 1.0, a) - (1.0 - std::pow(1.0 - x, a))) < 1e-12);
    }
  CHECK(regularized_incomplete_beta(0.0, 3, 4) == 0.0);
  CHECK(regularized_incomplete_beta(1.0, 3, 4) == 1.0);
}

TEST_CASE("incomplete beta reflection and monotonicity") {
  oracle::TestRng rng(17);
  for (int k = 0; k < 500; ++k) {
    double a = std::exp(rng.uniform(std::log(0.5), std::log(1e4)));
    double b = std::exp(rng.uniform(std::log(0.5), std::log(1e4)));
    double x = rng.uniform();
    CHECK(std::fabs(regularized_incomplete_beta(x, a, b) - (1.0 - regularized_incomplete_beta(1.0 - x, b, a))) < 1e-12);
  }
  for (double a : {0.5, 9.5, 100.5}) {
    double prev = 0.0;
    for (int k = 0; k <= 1000; ++k) {
      double v = regularized_incomplete_beta(k / 1000.0, a, 3.5);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("incomplete beta agrees with quadrature") {
  for (double a : {0.5, 1.5, 9.5, 50.5})
    for (double b : {1.5, 9.5, 50.5})
      for (double x : {0.02, 0.1, 0.35, 0.5, 0.8, 0.97})
        CHECK_MESSAGE(std::fabs(regularized_incomplete_beta(x, a, b) - oracle::beta_cdf(x, a, b)) < 1e-10,
                      "a=" << a << " b=" << b << " x=" << x);
}

TEST_CASE("incomplete beta domain errors") {
  CHECK_THROWS_AS(regularized_incomplete_beta(-0.1, 1, 1), InputError);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.1, 1, 1), InputError);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 0, 1), InputError);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 1, -2), InputError);
  CHECK_THROWS_AS(beta_quantile(1.5, 1, 1), InputError);
  CHECK_THROWS_AS(beta_quantile(0.5, 1, 0), InputError);
}

TEST_CASE("beta quantile") {
  for (double q : {0.0, 0.1, 0.5, 0.77, 1.0}) CHECK(std::fabs(beta_quantile(q, 1, 1) - q) < 1e-10);
  for (double a : {0.5, 5.5, 50.5}) CHECK(std::fabs(beta_quantile(0.5, a, a) - 0.5) < 1e-10);
  CHECK(std::fabs(beta_quantile(0.25, 2, 1) - 0.5) < 1e-10);
  CHECK(beta_quantile(0.0, 3, 3) == 0.0);
  CHECK(beta_quantile(1.0, 3, 3) == 1.0);

  const double qs[] = {0.005, 0.025, 0.5, 0.975, 0.995};
  const double shapes[] = {0.5, 1.5, 9.5, 50.5, 100.5};
  for (double a : shapes)
    for (double b : shapes) {
      double prev = 0.0;
      for (double q : qs) {
        double x = beta_quantile(q, a, b);
        CHECK_MESSAGE(std::fabs(regularized_incomplete_beta(x, a, b) - q) <= 1e-9, "a=" << a << " b=" << b << " q=" << q);
        CHECK(x >= prev);
        prev = x;
      }
    }
}

TEST_CASE("oracle reproduces the frozen quantile") {
  CHECK(std::fabs(oracle::beta_quantile(0.975, 0.5, 9.5) - kUpperC0M9) < 1e-12);
}

TEST_CASE("point estimate") {
  CHECK(point_estimate(3, 9) == 1.0 / 3.0);
  CHECK(point_estimate(0, 7) == 0.0);
  CHECK(point_estimate(7, 7) == 1.0);
  CHECK_THROWS_AS(point_estimate(8, 7), InputError);
  CHECK_THROWS_AS(point_estimate(0, 0), InputError);
}

TEST_CASE("confidence level domain") {
  CHECK_THROWS_AS(ConfidenceLevel(0.0), InputError);
  CHECK_THROWS_AS(ConfidenceLevel(1.0), InputError);
  CHECK_THROWS_AS(ConfidenceLevel(std::nan("")), InputError);
  CHECK(ConfidenceLevel().gamma() == 0.95);
  CHECK(ConfidenceLevel(0.9).alpha() == doctest::Approx(0.1));
}

TEST_CASE("Jeffreys interval examples") {
  ConfidenceLevel level(0.95);
  auto zero = jeffreys_interval(0, 9, level);
  CHECK(zero.p_lower == 0.0);
  CHECK(zero.p_hat == 0.0);
  CHECK(std::fabs(zero.p_upper - kUpperC0M9) < 1e-10);

  auto full = jeffreys_interval(9, 9, level);
  CHECK(full.p_upper == 1.0);
  CHECK(full.p_hat == 1.0);
  CHECK(full.p_lower > 0.0);

  for (std::size_t m : {2u, 10u, 50u, 100u}) {
    auto half = jeffreys_interval(m / 2, m, level);
    CHECK(std::fabs(half.p_lower - (1.0 - half.p_upper)) < 1e-10);
  }
  CHECK_THROWS_AS(jeffreys_interval(10, 9, level), InputError);
}

TEST_CASE("Jeffreys interval is equitailed") {
  for (double gamma : {0.9, 0.95, 0.99}) {
    ConfidenceLevel level(gamma);
    for (std::size_t m : {9u, 49u, 100u})
      for (std::size_t c = 1; c < m; ++c) {
        auto est = jeffreys_interval(c, m, level);
        double a = c + 0.5, b = m - c + 0.5;
        CHECK(std::fabs(regularized_incomplete_beta(est.p_lower, a, b) - level.alpha() / 2) <= 1e-9);
        CHECK(std::fabs(regularized_incomplete_beta(est.p_upper, a, b) - (1 - level.alpha() / 2)) <= 1e-9);
      }
  }
}

TEST_CASE("Jeffreys bounds are monotone in c") {
  ConfidenceLevel level(0.95);
  for (std::size_t m : {9u, 49u, 100u}) {
    auto prev = jeffreys_interval(0, m, level);
    for (std::size_t c = 1; c <= m; ++c) {
      auto cur = jeffreys_interval(c, m, level);
      CHECK(cur.p_lower >= prev.p_lower);
      CHECK(cur.p_upper >= prev.p_upper);
      prev = cur;
    }
  }
}

TEST_CASE("summarize") {
  ConfidenceLevel level(0.95);
  auto empty = summarize(TypeCounts{0, 0, 0, 5}, level);
  for (const auto& e : empty.by_type) {
    CHECK(e.p_hat == 0.0);
    CHECK(e.p_lower == 0.0);
  }
  auto all_min = summarize(TypeCounts{5, 0, 0, 5}, level);
  CHECK(all_min.minimum().p_hat == 1.0);
  CHECK(all_min.minimum().p_upper == 1.0);

  auto mixed = summarize(TypeCounts{2, 1, 0, 9}, level);
  CHECK(mixed.minimum() == jeffreys_interval(2, 9, level));
  CHECK(mixed.maximum() == jeffreys_interval(1, 9, level));
  CHECK(mixed.saddle() == jeffreys_interval(0, 9, level));
  CHECK(mixed.gamma == 0.95);
  CHECK(mixed.m() == 9);

  std::vector<TypeCounts> many{{2, 1, 0, 9}, {0, 0, 9, 9}, {2, 1, 0, 9}};
  auto batch = summarize(many, level);
  REQUIRE(batch.size() == 3);
  CHECK(batch[0] == mixed);
  CHECK(batch[2] == mixed);
  CHECK(batch[1] == summarize(many[1], level));
}

TEST_CASE("coverage experiment") {
  ConfidenceLevel level(0.95);
  auto zero = coverage_experiment(0.0, 9, level, 1000, 1);
  CHECK(zero.hits == 1000);
  CHECK(zero.empirical_coverage() == 1.0);

  auto r = coverage_experiment(0.5, 49, level, 10000, 42);
  CHECK(r.empirical_coverage() >= 0.91);
  CHECK(r.empirical_coverage() <= 0.99);
  // Exact coverage by summing the binomial pmf over covering counts.
  double exact = 0.0;
  for (std::size_t c = 0; c <= 49; ++c) {
    auto est = jeffreys_interval(c, 49, level);
    if (est.p_lower <= 0.5 && 0.5 <= est.p_upper) exact += oracle::binomial_pmf(c, 49, 0.5);
  }
  CHECK(std::fabs(r.empirical_coverage() - exact) < 4.0 * std::sqrt(exact * (1 - exact) / 10000));

  CHECK(coverage_experiment(0.3, 20, level, 500, 9) == coverage_experiment(0.3, 20, level, 500, 9));
  CHECK_FALSE(coverage_experiment(0.3, 20, level, 500, 9) == coverage_experiment(0.3, 20, level, 500, 10));
  CHECK_THROWS_AS(coverage_experiment(1.2, 9, level, 10, 0), InputError);
  CHECK_THROWS_AS(coverage_experiment(0.5, 9, level, 0, 0), InputError);
}
