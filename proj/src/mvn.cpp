#include "mgp/mvn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/special_functions/erf.hpp>

#include "mgp/errors.hpp"

namespace mgp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<int, 40> kPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// Genz integrand over [0,1]^(m-1) for a prioritised problem (b, L).
class SeparatedIntegrand {
 public:
  SeparatedIntegrand(Vector b, Matrix l) : b_(std::move(b)), l_(std::move(l)) {
    e0_ = normal_cdf(b_(0) / l_(0, 0));
    y_.resize(b_.size());
  }

  std::size_t free_dims() const { return static_cast<std::size_t>(b_.size()) - 1; }

  double operator()(std::span<const double> w) {
    const Eigen::Index m = b_.size();
    double e = e0_;
    double f = e;
    for (Eigen::Index i = 1; i < m; ++i) {
      const double p = std::clamp(w[static_cast<std::size_t>(i - 1)] * e,
                                  std::numeric_limits<double>::min(), 1.0 - 1e-16);
      y_(i - 1) = normal_quantile(p);
      double s = 0.0;
      for (Eigen::Index k = 0; k < i; ++k) s += l_(i, k) * y_(k);
      e = normal_cdf((b_(i) - s) / l_(i, i));
      f *= e;
      if (f == 0.0) break;
    }
    return f;
  }

 private:
  Vector b_;
  Matrix l_;
  Vector y_;
  double e0_;
};

// Cholesky with Genz-Bretz variable prioritisation: at each step pick the
// remaining coordinate with the smallest conditional probability.
void prioritised_cholesky(Vector& b, Matrix& c, Matrix& l) {
  const Eigen::Index m = b.size();
  l = Matrix::Zero(m, m);
  Vector y = Vector::Zero(m);
  const double threshold = 1e-14 * c.diagonal().maxCoeff();
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::Index best = i;
    double best_p = kInf;
    for (Eigen::Index j = i; j < m; ++j) {
      double v = c(j, j);
      double mu = 0.0;
      for (Eigen::Index k = 0; k < i; ++k) {
        v -= l(j, k) * l(j, k);
        mu += l(j, k) * y(k);
      }
      if (!(v > threshold)) continue;
      const double p = normal_cdf((b(j) - mu) / std::sqrt(v));
      if (p < best_p) {
        best_p = p;
        best = j;
      }
    }
    if (best != i) {
      std::swap(b(i), b(best));
      c.row(i).swap(c.row(best));
      c.col(i).swap(c.col(best));
      l.row(i).swap(l.row(best));
    }
    double pivot = c(i, i);
    for (Eigen::Index k = 0; k < i; ++k) pivot -= l(i, k) * l(i, k);
    if (!(pivot > threshold)) {
      std::ostringstream msg;
      msg << "pivot " << i << " is " << pivot;
      throw NotPositiveDefinite(msg.str());
    }
    l(i, i) = std::sqrt(pivot);
    for (Eigen::Index j = i + 1; j < m; ++j) {
      double s = c(j, i);
      for (Eigen::Index k = 0; k < i; ++k) s -= l(j, k) * l(i, k);
      l(j, i) = s / l(i, i);
    }
    double mu = 0.0;
    for (Eigen::Index k = 0; k < i; ++k) mu += l(i, k) * y(k);
    const double z = (b(i) - mu) / l(i, i);
    const double p = normal_cdf(z);
    // Mean of a standard normal truncated to (-inf, z].
    y(i) = p > 1e-300 ? -normal_pdf(z) / p : z;
  }
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (p <= 0.0) return -kInf;
  if (p >= 1.0) return kInf;
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double mvn_logpdf(const Vector& x, const Vector& mean, const Matrix& cov) {
  const Matrix l = cholesky(cov);
  const Vector z = solve_lower(l, x - mean);
  const double m = static_cast<double>(x.size());
  return -0.5 * m * std::log(2.0 * std::numbers::pi) - half_log_det(l) - 0.5 * z.squaredNorm();
}

Gaussian::Gaussian(Vector mean, const Matrix& cov)
    : mean_(std::move(mean)), cov_(cov), chol_(cholesky(cov)) {
  if (mean_.size() != cov_.rows())
    throw PreconditionError("mean and covariance dimensions differ");
  log_norm_ = -0.5 * static_cast<double>(mean_.size()) * std::log(2.0 * std::numbers::pi) -
              half_log_det(chol_);
}

double Gaussian::logpdf(const Vector& x) const {
  const Vector z = solve_lower(chol_, x - mean_);
  return log_norm_ - 0.5 * z.squaredNorm();
}

Vector Gaussian::sample(Rng& rng) const {
  Vector z(mean_.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.standard_normal();
  return mean_ + chol_.triangularView<Eigen::Lower>() * z;
}

MvnCdfResult mvn_cdf(std::span<const double> upper, const Matrix& cov,
                     const MvnCdfOptions& options) {
  const auto m = upper.size();
  if (static_cast<std::size_t>(cov.rows()) != m || static_cast<std::size_t>(cov.cols()) != m)
    throw PreconditionError("limit vector and covariance dimensions differ");
  if (!(options.tol > 0.0)) throw PreconditionError("mvn_cdf tolerance must be positive");
  if (m == 0) return {1.0, 0.0, 0};
  cholesky(cov);  // validates the full matrix even if coordinates are dropped

  std::vector<Eigen::Index> keep;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::isnan(upper[i])) throw PreconditionError("NaN limit in mvn_cdf");
    if (upper[i] == -kInf) return {0.0, 0.0, 0};
    if (upper[i] != kInf) keep.push_back(static_cast<Eigen::Index>(i));
  }
  const auto n = static_cast<Eigen::Index>(keep.size());
  if (n == 0) return {1.0, 0.0, 0};
  Vector b(n);
  Matrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    b(i) = upper[static_cast<std::size_t>(keep[i])];
    for (Eigen::Index j = 0; j < n; ++j) c(i, j) = cov(keep[i], keep[j]);
  }
  if (n == 1) return {normal_cdf(b(0) / std::sqrt(c(0, 0))), 0.0, 0};
  if (static_cast<std::size_t>(n) > kPrimes.size())
    throw PreconditionError("mvn_cdf supports at most 40 finite coordinates");

  Matrix l;
  prioritised_cholesky(b, c, l);
  SeparatedIntegrand integrand(b, l);
  const std::size_t dims = integrand.free_dims();

  std::vector<double> generator(dims);
  for (std::size_t i = 0; i < dims; ++i) generator[i] = std::sqrt(static_cast<double>(kPrimes[i]));

  const int k = options.randomizations;
  Rng rng(options.seed);
  std::vector<std::vector<double>> shifts(static_cast<std::size_t>(k), std::vector<double>(dims));
  for (auto& s : shifts)
    for (auto& v : s) v = rng.uniform_open();

  std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
  std::vector<double> w(dims), w_anti(dims);
  std::size_t per_shift = 0;
  std::size_t block = 64;
  std::size_t evaluations = 0;
  MvnCdfResult result;
  for (;;) {
    for (int r = 0; r < k; ++r) {
      const auto& shift = shifts[static_cast<std::size_t>(r)];
      double acc = 0.0;
      for (std::size_t p = per_shift + 1; p <= per_shift + block; ++p) {
        for (std::size_t i = 0; i < dims; ++i) {
          double x = static_cast<double>(p) * generator[i] + shift[i];
          x -= std::floor(x);
          const double tent = std::abs(2.0 * x - 1.0);
          w[i] = tent;
          w_anti[i] = 1.0 - tent;
        }
        acc += 0.5 * (integrand(w) + integrand(w_anti));
      }
      sums[static_cast<std::size_t>(r)] += acc;
    }
    per_shift += block;
    evaluations += 2 * block * static_cast<std::size_t>(k);

    double mean = 0.0;
    std::vector<double> estimates(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
      estimates[static_cast<std::size_t>(r)] =
          sums[static_cast<std::size_t>(r)] / static_cast<double>(per_shift);
      mean += estimates[static_cast<std::size_t>(r)];
    }
    mean /= k;
    double var = 0.0;
    for (double e : estimates) var += (e - mean) * (e - mean);
    var /= static_cast<double>(k) * (k - 1);
    result = {mean, std::sqrt(var), evaluations};
    if (result.std_error <= options.tol) return result;
    if (2 * evaluations > options.max_points) break;
    block = per_shift;  // doubles the per-shift point count
  }
  std::ostringstream msg;
  msg << "standard error " << result.std_error << " above " << options.tol << " after "
      << evaluations << " evaluations";
  throw ToleranceNotReached(msg.str());
}

}  // namespace mgp
