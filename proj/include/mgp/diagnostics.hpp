#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mgp/model.hpp"
#include "mgp/signature.hpp"
#include "mgp/simulate.hpp"

namespace mgp {

// -- Test statistics ---------------------------------------------------------

/// Asymptotic Kolmogorov critical value c with P[sqrt(n) D > c] = level.
double kolmogorov_critical(double level);
/// Two-sided standard normal critical value for `level`.
double normal_critical(double level);

/// sup_x |F_n(x) - cdf(x)|.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
/// sup_x |F_n(x) - G_m(x)|; ties (including -inf atoms) are handled exactly.
double ks_statistic(std::vector<double> a, std::vector<double> b);

struct CheckResult {
  std::string name;
  double statistic;
  double threshold;
  bool passed;
};

// -- Reports -----------------------------------------------------------------

struct FaceRow {
  Signature direction;
  double true_prob;
  double empirical_prob;
  std::size_t n;
  double z_score;
};

struct FaceReport {
  std::vector<FaceRow> rows;
  /// True when every |z| is below the normal critical value for `level`.
  bool within(double level) const;
};

FaceReport face_report(const MixtureModel& model, const SampleBatch& batch);

struct DistributionChecks {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Face frequencies, KS of max(Y) against Exp(1), binomial checks of
/// P[Y_j > 0] = 1 / l(1) and of the acceptance rate l(1) / d, each at `level`.
/// Throws PreconditionError for batches smaller than 1000.
DistributionChecks distribution_checks(const MixtureModel& model, const SampleBatch& batch,
                                       double level = 1e-3);

struct StdfCheckRow {
  std::vector<double> y;
  double stdf;
  double mc_mean;
  double mc_std_error;
  double z_score;
};

struct StdfCheck {
  std::vector<StdfCheckRow> rows;
  double max_abs_z = 0.0;
};

/// Compares mixture_stdf with the mean of max_j y_j e^{U_j} over `n_draws`
/// draws of the mixture generator (one set of draws shared by all grid points).
StdfCheck mc_stdf_check(const MixtureModel& model, std::span<const std::vector<double>> y_grid,
                        std::size_t n_draws, std::uint64_t seed);

}  // namespace mgp
