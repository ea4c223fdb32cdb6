#include "mgp/generators.hpp"

#include <cmath>
#include <limits>

#include "mgp/errors.hpp"
#include "mgp/model.hpp"

namespace mgp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Gaussian huesler_reiss_gaussian(const Matrix& variogram, std::size_t dim, double shift) {
  const Matrix g = variogram.rows() == 0 ? Matrix::Zero(static_cast<Eigen::Index>(dim),
                                                        static_cast<Eigen::Index>(dim))
                                         : variogram;
  const Matrix cov = variogram_to_covariance(g, shift);
  return Gaussian(-0.5 * cov.diagonal(), cov);
}

}  // namespace

FactorGenerator::FactorGenerator(const FactorFamily& family, std::size_t dim,
                                 double covariance_shift)
    : dim_(dim),
      law_(std::holds_alternative<Logistic>(family)
               ? std::variant<LogisticData, Gaussian>(LogisticData{
                     std::get<Logistic>(family).alpha,
                     std::lgamma(1.0 - std::get<Logistic>(family).alpha)})
               : std::variant<LogisticData, Gaussian>(huesler_reiss_gaussian(
                     std::get<HueslerReiss>(family).variogram, dim, covariance_shift))) {}

Vector FactorGenerator::sample(Rng& rng) const {
  if (const auto* lg = std::get_if<LogisticData>(&law_)) {
    Vector u(static_cast<Eigen::Index>(dim_));
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      // ln X for X = -1 / ln V unit Fréchet.
      const double log_frechet = -std::log(-std::log(rng.uniform_open()));
      u(i) = lg->alpha * log_frechet - lg->log_gamma_one_minus_alpha;
    }
    return u;
  }
  return std::get<Gaussian>(law_).sample(rng);
}

double FactorGenerator::logistic_coordinate_logpdf(const LogisticData& law, double u) {
  // U = alpha G - c with G standard Gumbel.
  const double g = (u + law.log_gamma_one_minus_alpha) / law.alpha;
  return -std::log(law.alpha) - g - std::exp(-g);
}

double FactorGenerator::logpdf(const Vector& u) const {
  if (const auto* lg = std::get_if<LogisticData>(&law_)) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) s += logistic_coordinate_logpdf(*lg, u(i));
    return s;
  }
  return std::get<Gaussian>(law_).logpdf(u);
}

TiltedProposal::TiltedProposal(const FactorGenerator& generator, Vector shifts,
                               std::size_t tilt_position)
    : tilt_(tilt_position),
      shifts_(std::move(shifts)),
      law_(LogisticTilt{{0.5, 0.0}}) {
  if (static_cast<std::size_t>(shifts_.size()) != generator.dim() || tilt_ >= generator.dim())
    throw PreconditionError("tilted proposal dimensions are inconsistent");
  if (generator.is_logistic()) {
    law_ = LogisticTilt{generator.logistic()};
    return;
  }
  // Tilting N(mu, S) by exp(t_j) shifts the mean by column j of S.
  const Gaussian& base = generator.gaussian();
  const auto j = static_cast<Eigen::Index>(tilt_);
  Vector mean = base.mean() + shifts_ + base.cov().col(j);
  law_ = Gaussian(std::move(mean), base.cov());
}

Vector TiltedProposal::sample(Rng& rng) const {
  if (const auto* tilt = std::get_if<LogisticTilt>(&law_)) {
    const auto& law = tilt->law;
    Vector t(shifts_.size());
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      if (static_cast<std::size_t>(i) == tilt_) {
        const double n = rng.gamma(1.0 - law.alpha);
        t(i) = -law.alpha * std::log(n) + shifts_(i) - law.log_gamma_one_minus_alpha;
      } else {
        const double log_frechet = -std::log(-std::log(rng.uniform_open()));
        t(i) = law.alpha * log_frechet - law.log_gamma_one_minus_alpha + shifts_(i);
      }
    }
    return t;
  }
  return std::get<Gaussian>(law_).sample(rng);
}

double TiltedProposal::logpdf(const Vector& t) const {
  if (const auto* tilt = std::get_if<LogisticTilt>(&law_)) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      const double u = t(i) - shifts_(i);
      s += FactorGenerator::logistic_coordinate_logpdf(tilt->law, u);
      if (static_cast<std::size_t>(i) == tilt_) s += u;
    }
    return s;
  }
  return std::get<Gaussian>(law_).logpdf(t);
}

Vector sample_factor_generator(const FactorGenerator& generator, Rng& rng) {
  return generator.sample(rng);
}

std::vector<double> tilt_weights(const MixtureModel& model, std::size_t k) {
  return model.column(k).tilt_weights;
}

Vector sample_tilted(const TiltedProposal& proposal, Rng& rng) { return proposal.sample(rng); }

double eval_tilted_logdensity(const TiltedProposal& proposal, const Vector& t) {
  return proposal.logpdf(t);
}

MgpPoint sample_mixture_generator(const MixtureModel& model, Rng& rng) {
  const std::size_t k = rng.categorical(model.masses());
  const Column& col = model.column(k);
  const Vector u = col.generator.sample(rng) + col.shifts;
  return {col.signature, std::vector<double>(u.data(), u.data() + u.size())};
}

double mixture_generator_logpdf(const MixtureModel& model, const MgpPoint& u) {
  double best = kNegInf;
  std::vector<double> terms;
  for (std::size_t k = 0; k < model.factors(); ++k) {
    const Column& col = model.column(k);
    if (col.signature != u.support) continue;
    Vector x(static_cast<Eigen::Index>(u.values.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = u.values[static_cast<std::size_t>(i)];
    const double term = std::log(model.masses()[k]) + col.generator.logpdf(x - col.shifts);
    terms.push_back(term);
    best = std::max(best, term);
  }
  if (terms.empty() || best == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - best);
  return best + std::log(s);
}

}  // namespace mgp
