#include <boost/math/distributions/chi_squared.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "mgp/diagnostics.hpp"
#include "mgp/errors.hpp"
#include "mgp/simulate.hpp"
#include "mgp/stdf.hpp"

using namespace mgp;

namespace {

const double kZ = 4.0;

bool same_points(const std::vector<MgpPoint>& a, const std::vector<MgpPoint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].support != b[i].support || a[i].values != b[i].values) return false;
  return true;
}

}  // namespace

TEST_CASE("samples live on signatures with positive maximum") {
  const MixtureModel models[] = {testing::triangular_logistic(), testing::triangular_huesler_reiss()};
  for (const auto& model : models) {
    const SampleBatch batch = sample_batch(model, {.n = 10'000, .seed = 5});
    CHECK(batch.points.size() == 10'000);
    CHECK(batch.acceptances == 10'000);
    CHECK(batch.proposals >= batch.acceptances);
    const auto sigs = signatures(model);
    std::size_t counted = 0;
    for (const auto& p : batch.points) {
      CHECK(std::find(sigs.begin(), sigs.end(), p.support) != sigs.end());
      CHECK(p.max_value() > 0.0);
    }
    for (std::size_t k = 0; k < 3; ++k) {
      counted += batch.column_counts[k];
      const double w = model.face_weights().weights[k];
      const double freq = batch.column_counts[k] / 10'000.0;
      CHECK(std::abs(freq - w) < kZ * std::sqrt(w * (1 - w) / 10'000.0));
    }
    CHECK(counted == 10'000);
  }
}

TEST_CASE("single sample batch") {
  const MixtureModel model = testing::triangular_logistic();
  const SampleBatch batch = sample_batch(model, {.n = 1, .seed = 123});
  REQUIRE(batch.points.size() == 1);
  CHECK(batch.points[0].max_value() > 0.0);
  CHECK_THROWS_AS(sample_batch(model, {.n = 0}), PreconditionError);
}

TEST_CASE("batches are deterministic and independent of the worker count") {
  const MixtureModel model = testing::triangular_huesler_reiss();
  const SampleBatch one = sample_batch(model, {.n = 2000, .seed = 77, .workers = 1});
  const SampleBatch again = sample_batch(model, {.n = 2000, .seed = 77, .workers = 1});
  const SampleBatch two = sample_batch(model, {.n = 2000, .seed = 77, .workers = 2});
  const SampleBatch eight = sample_batch(model, {.n = 2000, .seed = 77, .workers = 8});
  CHECK(same_points(one.points, again.points));
  CHECK(same_points(one.points, two.points));
  CHECK(same_points(one.points, eight.points));
  CHECK(one.proposals == eight.proposals);
  const SampleBatch other = sample_batch(model, {.n = 2000, .seed = 78});
  CHECK_FALSE(same_points(one.points, other.points));
}

TEST_CASE("rejection budget") {
  const MixtureModel model = testing::triangular_logistic();
  // With a single proposal allowed, roughly 30% of draws fail.
  try {
    sample_batch(model, {.n = 100, .seed = 1, .max_rejections = 1, .workers = 4});
    FAIL("expected RejectionBudgetExceeded");
  } catch (const RejectionBudgetExceeded& e) {
    CHECK(std::string(e.what()).find("sample ") != std::string::npos);
  }
}

TEST_CASE("max(Y) is unit exponential and P[Y_j > 0] = 1 / l(1)") {
  const MixtureModel model = testing::triangular_logistic();
  const std::size_t n = 10'000;
  const SampleBatch batch = sample_batch(model, {.n = n, .seed = 9});
  std::vector<double> maxima;
  std::vector<std::size_t> exceed(3, 0);
  for (const auto& p : batch.points) {
    maxima.push_back(p.max_value());
    for (std::size_t j = 0; j < 3; ++j)
      if (p.coordinate(j) > 0.0) ++exceed[j];
  }
  const double ks = ks_statistic(maxima, [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x); });
  CHECK(std::sqrt(double(n)) * ks < kolmogorov_critical(1e-3));
  const double p = 1.0 / model.ell_one();
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(std::abs(exceed[j] / double(n) - p) < kZ * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("acceptance rate is l(1) / d") {
  const MixtureModel model = testing::triangular_logistic();
  const SampleBatch batch = sample_batch(model, {.n = 50'000, .seed = 10, .workers = 4});
  const double rate = double(batch.acceptances) / double(batch.proposals);
  const double p = model.ell_one() / 3.0;
  CHECK(p == doctest::Approx(0.70031).epsilon(1e-4));
  CHECK(std::abs(rate - p) < kZ * std::sqrt(p * (1 - p) / double(batch.proposals)));
}

TEST_CASE("one-dimensional face: samples follow the density") {
  // On face {3} the density is (1/3) e^{-y} / l(1) for y > 0, so the
  // conditional law is Exp(1). Chi-square test on 10 equiprobable bins.
  const MixtureModel models[] = {testing::triangular_logistic(), testing::triangular_huesler_reiss()};
  for (const auto& model : models) {
    const SampleBatch batch = sample_batch(model, {.n = 20'000, .seed = 4});
    const int bins = 10;
    std::vector<double> counts(bins, 0.0);
    double total = 0.0;
    for (const auto& p : batch.points) {
      if (p.support != Signature{2}) continue;
      const double u = -std::expm1(-p.values[0]);
      counts[std::min(bins - 1, static_cast<int>(u * bins))] += 1.0;
      total += 1.0;
    }
    double chi2 = 0.0;
    for (double c : counts) chi2 += (c - total / bins) * (c - total / bins) / (total / bins);
    const boost::math::chi_squared dist(bins - 1);
    CHECK(chi2 < boost::math::quantile(boost::math::complement(dist, 1e-3)));
  }
}

TEST_CASE("boxcox_transform") {
  const MgpPoint p{Signature{0, 2}, {0.0, 4.0}};
  const auto z = boxcox_transform(p, 3);
  CHECK(z[0] == 0.0);
  CHECK(z[1] == -4.0);
  CHECK(z[2] == doctest::Approx(6.87312731383618).epsilon(1e-14));
  CHECK(boxcox_transform(p, 3, 2.0)[1] == -2.0);
  CHECK_THROWS_AS(boxcox_transform(p, 3, 0.0), PreconditionError);
}

TEST_CASE("extremal function") {
  const MixtureModel indep = testing::independence(3);
  Rng rng(17);
  for (std::size_t j = 0; j < 3; ++j) {
    const MgpPoint q = sample_extremal_function(indep, j, rng);
    CHECK(q.support == Signature{j});
  }

  const MixtureModel model = testing::triangular_logistic();
  std::vector<std::size_t> on_column(3, 0);
  for (int i = 0; i < 30'000; ++i) {
    const MgpPoint q = sample_extremal_function(model, 2, rng);
    for (std::size_t k = 0; k < 3; ++k)
      if (q.support == model.signature(k)) ++on_column[k];
  }
  // Column chosen with probability a_3k = 1/3 each.
  for (auto c : on_column) CHECK(std::abs(c / 30'000.0 - 1.0 / 3) < kZ * std::sqrt(2.0 / 9 / 30'000));
  CHECK_THROWS_AS(sample_extremal_function(model, 3, rng), PreconditionError);
}
