#pragma once

#include <cstdint>
#include <span>

#include "mgp/linalg.hpp"
#include "mgp/rng.hpp"

namespace mgp {

double normal_cdf(double x);
double normal_quantile(double p);

double mvn_logpdf(const Vector& x, const Vector& mean, const Matrix& cov);

/// Multivariate normal with a cached Cholesky factor.
class Gaussian {
 public:
  Gaussian(Vector mean, const Matrix& cov);

  std::size_t dim() const { return static_cast<std::size_t>(mean_.size()); }
  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }
  const Matrix& cholesky_factor() const { return chol_; }

  double logpdf(const Vector& x) const;
  Vector sample(Rng& rng) const;

 private:
  Vector mean_;
  Matrix cov_;
  Matrix chol_;
  double log_norm_;
};

struct MvnCdfOptions {
  double tol = 1e-6;                 // target standard error
  std::uint64_t seed = 0;
  int randomizations = 12;
  std::size_t max_points = 1u << 22;  // total integrand evaluations
};

struct MvnCdfResult {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t evaluations = 0;
};

/// P[N(0, cov) <= upper] by Genz's separation of variables with variable
/// prioritisation and a randomly shifted rank-1 lattice (antithetic, tent
/// periodised). +inf limits drop their coordinate; any -inf limit gives 0.
/// Dimension 0 gives 1 and dimension 1 is evaluated in closed form.
///
/// Throws NotPositiveDefinite, or ToleranceNotReached once `max_points`
/// evaluations fail to bring the standard error under `tol`.
MvnCdfResult mvn_cdf(std::span<const double> upper, const Matrix& cov,
                     const MvnCdfOptions& options = {});

}  // namespace mgp
