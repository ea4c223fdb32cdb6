#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "mgp/errors.hpp"
#include "mgp/generators.hpp"
#include "mgp/mvn.hpp"
#include "mgp/rng.hpp"
#include "mgp/stdf.hpp"

using namespace mgp;
using testing::exchangeable_variogram;

TEST_CASE("factor_stdf examples") {
  const std::vector<double> ones{1.0, 1.0};
  CHECK(factor_stdf(Logistic{0.5}, ones) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  // |J| = 2: both summands equal Phi(sqrt(G)/2); oracle value from the
  // univariate normal CDF.
  CHECK(factor_stdf(HueslerReiss{exchangeable_variogram(2, 1.38)}, ones) ==
        doctest::Approx(1.4430427521771767).epsilon(1e-12));

  for (const FactorFamily& f :
       {FactorFamily{Logistic{0.3}}, FactorFamily{HueslerReiss{exchangeable_variogram(3, 0.8)}}}) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<double> e(3, 0.0);
      e[j] = 1.0;
      CHECK(factor_stdf(f, e) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(factor_stdf(Logistic{0.5}, std::vector<double>{2.5}) == 2.5);
  CHECK_THROWS_AS(factor_stdf(Logistic{0.5}, std::vector<double>{1.0, -0.1}), NegativeInput);
}

TEST_CASE("mixture_stdf examples") {
  const MixtureModel logistic = testing::triangular_logistic();
  const std::vector<double> one(3, 1.0);
  const double exact = 7.0 / 6 + std::sqrt(13.0) / 6 + 1.0 / 3;
  CHECK(mixture_stdf(logistic, one) == doctest::Approx(exact).epsilon(1e-14));
  CHECK(logistic.ell_one() == doctest::Approx(exact).epsilon(1e-14));

  CHECK(mixture_stdf(testing::independence(3), one) == doctest::Approx(3.0));

  const MixtureModel hr = testing::triangular_huesler_reiss();
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<double> e(3, 0.0);
    e[j] = 1.0;
    CHECK(mixture_stdf(logistic, e) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mixture_stdf(hr, e) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mixture_stdf(logistic, std::vector<double>{1, -1, 1}), NegativeInput);
}

TEST_CASE("mixture_stdf at 1 agrees with the generator Monte Carlo oracle") {
  // l(y) = E[max_j y_j e^{U_j}] for the mixture generator.
  const MixtureModel model = testing::triangular_logistic();
  Rng rng(2024);
  const std::size_t n = 1'000'000;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const MgpPoint u = sample_mixture_generator(model, rng);
    double m = 0.0;
    for (double v : u.values) m = std::max(m, std::exp(v));
    sum += m;
    sum_sq += m * m;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::abs(mean - 2.100925212577332) < 4 * se);
}

TEST_CASE("face weights") {
  const auto logistic = testing::triangular_logistic().face_weights().weights;
  CHECK(std::abs(logistic[0] - 0.555) <= 0.001);
  CHECK(std::abs(logistic[1] - 0.286) <= 0.001);
  CHECK(std::abs(logistic[2] - 0.158) <= 0.001);

  const auto hr = testing::triangular_huesler_reiss().face_weights().weights;
  CHECK(std::abs(hr[0] - 0.553) <= 0.001);
  CHECK(std::abs(hr[1] - 0.288) <= 0.001);
  CHECK(std::abs(hr[2] - 0.157) <= 0.001);

  const MixtureModel indep = testing::independence(4);
  for (double w : indep.face_weights().weights)
    CHECK(w == doctest::Approx(0.25));
}

TEST_CASE("stdf homogeneity and bounds on random points") {
  const MixtureModel models[] = {testing::triangular_logistic(0.3),
                                 testing::triangular_huesler_reiss(0.9)};
  Rng rng(99);
  for (const auto& model : models) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> y(3);
      for (auto& v : y) v = rng.uniform_open() < 0.2 ? 0.0 : 3.0 * rng.uniform_open();
      const double l = mixture_stdf(model, y);
      const double c = 0.1 + 5.0 * rng.uniform_open();
      std::vector<double> cy(y);
      for (auto& v : cy) v *= c;
      CHECK(mixture_stdf(model, cy) == doctest::Approx(c * l).epsilon(1e-10));
      double mx = 0.0, sum = 0.0;
      for (double v : y) {
        mx = std::max(mx, v);
        sum += v;
      }
      CHECK(l >= mx - 1e-6);
      CHECK(l <= sum + 1e-6);
    }
  }
}

TEST_CASE("Hüsler–Reiss stdf is invariant under coordinate permutation") {
  const HueslerReiss hr{exchangeable_variogram(3, 1.38)};
  const std::vector<double> y{0.7, 1.3, 0.2};
  const std::vector<double> y_perm{1.3, 0.2, 0.7};
  const double a = factor_stdf(hr, y, {1e-7, 1});
  const double b = factor_stdf(hr, y_perm, {1e-7, 77});
  CHECK(std::abs(a - b) < 2e-6);
}
