#include "mgp/density.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mgp/errors.hpp"
#include "mgp/generators.hpp"

namespace mgp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms) {
  double top = kNegInf;
  for (double t : terms) top = std::max(top, t);
  if (top == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - top);
  return top + std::log(s);
}

double logistic_log_term(const Column& col, double alpha, const MgpPoint& p, double ell_one) {
  const auto n = static_cast<double>(col.signature.size());
  std::vector<double> z(col.signature.size());
  double sum_z = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = (std::log(col.coefficients(static_cast<Eigen::Index>(i))) - p.values[i]) / alpha;
    sum_z += z[i];
  }
  return (n - 1.0) * std::log(1.0 / alpha) + std::lgamma(n - alpha) + sum_z - std::log(ell_one) -
         std::lgamma(1.0 - alpha) - (n - alpha) * log_sum_exp(z);
}

double huesler_reiss_log_term(const Column& col, const Matrix& g, const MgpPoint& p,
                              double ell_one) {
  Vector x(static_cast<Eigen::Index>(p.values.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    x(i) = p.values[static_cast<std::size_t>(i)] - std::log(col.coefficients(i));
  const std::size_t anchor = x.size() == 0 ? 0 : static_cast<std::size_t>(x.size()) - 1;
  return huesler_reiss_log_exponent_density(x, g, anchor) - std::log(ell_one);
}

}  // namespace

double huesler_reiss_log_exponent_density(const Vector& x, const Matrix& variogram,
                                          std::size_t anchor) {
  const auto m = static_cast<std::size_t>(x.size());
  if (m == 0) throw PreconditionError("empty argument");
  if (m == 1) return -x(0);
  if (static_cast<std::size_t>(variogram.rows()) != m || anchor >= m)
    throw PreconditionError("variogram or anchor does not match the argument");

  const Matrix sigma = anchored_sigma(variogram, anchor);
  const Matrix l = cholesky(sigma);
  Vector g(static_cast<Eigen::Index>(m - 1));
  Eigen::Index a = 0;
  const auto d = static_cast<Eigen::Index>(anchor);
  for (Eigen::Index s = 0; s < static_cast<Eigen::Index>(m); ++s) {
    if (s == d) continue;
    g(a++) = x(s) - x(d) + 0.5 * variogram(s, d);
  }
  const Vector z = solve_lower(l, g);
  return -x(d) - 0.5 * static_cast<double>(m - 1) * std::log(2.0 * std::numbers::pi) -
         half_log_det(l) - 0.5 * z.squaredNorm();
}

double log_density(const MixtureModel& model, const MgpPoint& p) {
  if (p.values.size() != p.support.size())
    throw PreconditionError("point values do not match its support");
  if (p.support.back() >= model.dim()) throw PreconditionError("point support exceeds dimension");
  if (!(p.max_value() >= 0.0)) return kNegInf;

  std::vector<double> terms;
  for (const Column& col : model.columns()) {
    if (col.signature != p.support) continue;
    if (const auto* lg = std::get_if<Logistic>(&col.family)) {
      terms.push_back(logistic_log_term(col, lg->alpha, p, model.ell_one()));
    } else {
      terms.push_back(huesler_reiss_log_term(col, std::get<HueslerReiss>(col.family).variogram, p,
                                             model.ell_one()));
    }
  }
  return log_sum_exp(terms);
}

QuadratureResult density_oracle(const MixtureModel& model, const MgpPoint& p, double quad_tol) {
  if (p.values.size() != p.support.size())
    throw PreconditionError("point values do not match its support");
  if (!(p.max_value() >= 0.0)) return {0.0, 0.0};

  double y_max = p.values[0], y_min = p.values[0];
  for (double v : p.values) {
    y_max = std::max(y_max, v);
    y_min = std::min(y_min, v);
  }
  MgpPoint shifted = p;
  auto integrand = [&](double r) {
    for (std::size_t i = 0; i < p.values.size(); ++i) shifted.values[i] = p.values[i] + r;
    const double lp = mixture_generator_logpdf(model, shifted) + r;
    return lp == kNegInf ? 0.0 : std::exp(lp);
  };

  using boost::math::quadrature::gauss_kronrod;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double lo = -40.0 - y_max;
  const double hi = 40.0 + std::abs(y_min);
  // Two Kronrod orders on the same split; their difference is the error
  // estimate (Boost's own estimate is not on the scale of the integral).
  const double pieces[][2] = {{-kInf, lo}, {lo, hi}, {hi, kInf}};
  QuadratureResult total;
  double coarse = 0.0;
  for (const auto& piece : pieces) {
    total.value += gauss_kronrod<double, 61>::integrate(integrand, piece[0], piece[1], 20, 1e-13);
    coarse += gauss_kronrod<double, 31>::integrate(integrand, piece[0], piece[1], 20, 1e-13);
  }
  total.error = std::abs(total.value - coarse);
  total.value /= model.ell_one();
  total.error /= model.ell_one();
  if (!std::isfinite(total.value) || total.error > std::max(quad_tol, 1e-9 * total.value))
    throw QuadratureFailure("adaptive quadrature did not reach the requested accuracy");
  return total;
}

double face_mass(const MixtureModel& model, std::size_t k) {
  if (k >= model.factors()) throw PreconditionError("column index out of range");
  double mass = 0.0;
  for (std::size_t i = 0; i < model.factors(); ++i)
    if (model.signature(i) == model.signature(k)) mass += model.face_weights().weights[i];
  return mass;
}

}  // namespace mgp
