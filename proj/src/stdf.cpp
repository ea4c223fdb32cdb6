#include "mgp/stdf.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "mgp/errors.hpp"
#include "mgp/mvn.hpp"

namespace mgp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kWeightSeed = 0x5EED'F00D'0000'0001ULL;

double logistic_stdf(double alpha, std::span<const double> y) {
  // Factor out the largest coordinate so y^(1/alpha) cannot overflow.
  double top = 0.0;
  for (double v : y) top = std::max(top, v);
  if (top == 0.0) return 0.0;
  double s = 0.0;
  for (double v : y) s += std::pow(v / top, 1.0 / alpha);
  return top * std::pow(s, alpha);
}

double huesler_reiss_stdf(const Matrix& g, std::span<const double> y, const StdfOptions& options) {
  const std::size_t m = y.size();
  std::vector<double> log_y(m);
  for (std::size_t i = 0; i < m; ++i) log_y[i] = y[i] > 0.0 ? std::log(y[i]) : -kInf;

  double total = 0.0;
  std::vector<double> eta(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (y[j] == 0.0) continue;
    std::size_t a = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (s == j) continue;
      eta[a++] = y[s] == 0.0 ? kInf : log_y[j] - log_y[s] + 0.5 * g(j, s);
    }
    MvnCdfOptions mvn;
    mvn.tol = options.mvn_tol;
    mvn.seed = derive_seed(options.seed, j);
    total += y[j] * mvn_cdf(eta, anchored_sigma(g, j), mvn).value;
  }
  return total;
}

}  // namespace

double factor_stdf(const FactorFamily& family, std::span<const double> y,
                   const StdfOptions& options) {
  for (double v : y)
    if (!(v >= 0.0)) throw NegativeInput("stdf arguments must be nonnegative");
  if (y.empty()) throw PreconditionError("stdf argument is empty");
  if (y.size() == 1) return y[0];

  if (const auto* lg = std::get_if<Logistic>(&family)) return logistic_stdf(lg->alpha, y);
  const auto& hr = std::get<HueslerReiss>(family);
  if (static_cast<std::size_t>(hr.variogram.rows()) != y.size())
    throw PreconditionError("variogram dimension does not match the argument");
  return huesler_reiss_stdf(hr.variogram, y, options);
}

double mixture_stdf(const MixtureModel& model, std::span<const double> y) {
  if (y.size() != model.dim()) throw PreconditionError("stdf argument has wrong dimension");
  for (double v : y)
    if (!(v >= 0.0)) throw NegativeInput("stdf arguments must be nonnegative");
  double total = 0.0;
  for (std::size_t k = 0; k < model.factors(); ++k) {
    const Column& col = model.column(k);
    std::vector<double> arg(col.signature.size());
    for (std::size_t i = 0; i < arg.size(); ++i)
      arg[i] = col.coefficients(static_cast<Eigen::Index>(i)) * y[col.signature[i]];
    total += factor_stdf(col.family, arg, {model.options().mvn_tol, derive_seed(kWeightSeed, k)});
  }
  return total;
}

FaceWeights compute_face_weights(const std::vector<Column>& columns, double mvn_tol) {
  FaceWeights out;
  out.weights.resize(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const Column& col = columns[k];
    std::vector<double> a(col.coefficients.data(),
                          col.coefficients.data() + col.coefficients.size());
    out.weights[k] = factor_stdf(col.family, a, {mvn_tol, derive_seed(kWeightSeed, k)});
    out.ell_one += out.weights[k];
  }
  for (double& w : out.weights) w /= out.ell_one;
  return out;
}

const FaceWeights& face_weights(const MixtureModel& model) { return model.face_weights(); }

}  // namespace mgp
