#include "mgp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mgp/density.hpp"
#include "mgp/errors.hpp"
#include "mgp/generators.hpp"
#include "mgp/mvn.hpp"
#include "mgp/stdf.hpp"

namespace mgp {

double kolmogorov_critical(double level) { return std::sqrt(-0.5 * std::log(level / 2.0)); }

double normal_critical(double level) { return normal_quantile(1.0 - level / 2.0); }

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const auto n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (j == b.size() || (i < a.size() && a[i] <= b[j]))
      x = a[i];
    else
      x = b[j];
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

bool FaceReport::within(double level) const {
  const double crit = normal_critical(level);
  return std::all_of(rows.begin(), rows.end(),
                     [&](const FaceRow& r) { return std::abs(r.z_score) < crit; });
}

FaceReport face_report(const MixtureModel& model, const SampleBatch& batch) {
  if (batch.points.empty()) throw PreconditionError("empty batch");
  FaceReport report;
  const std::size_t n = batch.points.size();
  for (std::size_t k = 0; k < model.factors(); ++k) {
    const Signature& dir = model.signature(k);
    const bool seen = std::any_of(report.rows.begin(), report.rows.end(),
                                  [&](const FaceRow& r) { return r.direction == dir; });
    if (seen) continue;
    const auto count = static_cast<std::size_t>(
        std::count_if(batch.points.begin(), batch.points.end(),
                      [&](const MgpPoint& p) { return p.support == dir; }));
    const double p_true = face_mass(model, k);
    const double p_emp = static_cast<double>(count) / static_cast<double>(n);
    const double se = std::sqrt(p_true * (1.0 - p_true) / static_cast<double>(n));
    const double z = se > 0.0 ? (p_emp - p_true) / se : (p_emp == p_true ? 0.0 : INFINITY);
    report.rows.push_back({dir, p_true, p_emp, n, z});
  }
  return report;
}

bool DistributionChecks::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

DistributionChecks distribution_checks(const MixtureModel& model, const SampleBatch& batch,
                                       double level) {
  const std::size_t n = batch.points.size();
  if (n < 1000) throw PreconditionError("distribution checks need at least 1000 samples");
  const double z_crit = normal_critical(level);
  const auto nd = static_cast<double>(n);
  DistributionChecks out;

  for (const FaceRow& row : face_report(model, batch).rows) {
    out.checks.push_back({"face " + row.direction.to_string() + " frequency |z|",
                          std::abs(row.z_score), z_crit, std::abs(row.z_score) < z_crit});
  }

  std::vector<double> maxima(n);
  for (std::size_t i = 0; i < n; ++i) maxima[i] = batch.points[i].max_value();
  const double ks = std::sqrt(nd) * ks_statistic(maxima, [](double x) {
                      return x <= 0.0 ? 0.0 : -std::expm1(-x);
                    });
  const double ks_crit = kolmogorov_critical(level);
  out.checks.push_back({"max(Y) ~ Exp(1) sqrt(n) KS", ks, ks_crit, ks < ks_crit});

  const double p_exceed = 1.0 / model.ell_one();
  const double se_exceed = std::sqrt(p_exceed * (1.0 - p_exceed) / nd);
  for (std::size_t j = 0; j < model.dim(); ++j) {
    const auto count = std::count_if(batch.points.begin(), batch.points.end(),
                                     [&](const MgpPoint& p) { return p.coordinate(j) > 0.0; });
    const double z = (static_cast<double>(count) / nd - p_exceed) / se_exceed;
    std::ostringstream name;
    name << "P[Y_" << j + 1 << " > 0] = 1/l(1) |z|";
    out.checks.push_back({name.str(), std::abs(z), z_crit, std::abs(z) < z_crit});
  }

  if (batch.proposals > 0) {
    const double p_accept = model.ell_one() / static_cast<double>(model.dim());
    const auto trials = static_cast<double>(batch.proposals);
    const double rate = static_cast<double>(batch.acceptances) / trials;
    const double se = std::sqrt(p_accept * (1.0 - p_accept) / trials);
    const double z = se > 0.0 ? (rate - p_accept) / se : 0.0;
    out.checks.push_back({"acceptance rate = l(1)/d |z|", std::abs(z), z_crit,
                          std::abs(z) < z_crit});
  }
  return out;
}

StdfCheck mc_stdf_check(const MixtureModel& model, std::span<const std::vector<double>> y_grid,
                        std::size_t n_draws, std::uint64_t seed) {
  if (n_draws < 2) throw PreconditionError("need at least two draws");
  const std::size_t g = y_grid.size();
  for (const auto& y : y_grid) {
    if (y.size() != model.dim()) throw PreconditionError("grid point has wrong dimension");
    for (double v : y)
      if (!(v >= 0.0)) throw NegativeInput("grid points must be nonnegative");
  }
  std::vector<double> sum(g, 0.0), sum_sq(g, 0.0);
  Rng rng(seed);
  for (std::size_t i = 0; i < n_draws; ++i) {
    const MgpPoint u = sample_mixture_generator(model, rng);
    for (std::size_t p = 0; p < g; ++p) {
      double m = 0.0;
      for (std::size_t s = 0; s < u.support.size(); ++s)
        m = std::max(m, y_grid[p][u.support[s]] * std::exp(u.values[s]));
      sum[p] += m;
      sum_sq[p] += m * m;
    }
  }
  StdfCheck out;
  const auto nd = static_cast<double>(n_draws);
  for (std::size_t p = 0; p < g; ++p) {
    const double mean = sum[p] / nd;
    const double var = std::max(0.0, (sum_sq[p] - nd * mean * mean) / (nd - 1.0));
    const double se = std::sqrt(var / nd);
    const double exact = mixture_stdf(model, y_grid[p]);
    const double z = se > 0.0 ? (mean - exact) / se : (mean == exact ? 0.0 : INFINITY);
    out.rows.push_back({y_grid[p], exact, mean, se, z});
    out.max_abs_z = std::max(out.max_abs_z, std::abs(z));
  }
  return out;
}

}  // namespace mgp
