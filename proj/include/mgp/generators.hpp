#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "mgp/family.hpp"
#include "mgp/mvn.hpp"
#include "mgp/point.hpp"
#include "mgp/rng.hpp"

namespace mgp {

class MixtureModel;

/// Law of the generator U^(k) of one factor, normalised so E[exp(U_j)] = 1.
///
/// Logistic: independent U_j = alpha ln X_j - ln Gamma(1 - alpha) with X_j unit
/// Fréchet. Hüsler–Reiss: N(-diag(S)/2, S) for a covariance S with the
/// factor's variogram.
class FactorGenerator {
 public:
  struct LogisticData {
    double alpha;
    double log_gamma_one_minus_alpha;
  };

  /// `dim` is the signature size; `covariance_shift` is the constant c used
  /// to build S from a Hüsler–Reiss variogram.
  FactorGenerator(const FactorFamily& family, std::size_t dim, double covariance_shift = 1.0);

  std::size_t dim() const { return dim_; }
  bool is_logistic() const { return std::holds_alternative<LogisticData>(law_); }
  const LogisticData& logistic() const { return std::get<LogisticData>(law_); }
  const Gaussian& gaussian() const { return std::get<Gaussian>(law_); }

  Vector sample(Rng& rng) const;
  /// Log Lebesgue density of U^(k) at u.
  double logpdf(const Vector& u) const;
  /// Log density of a single logistic coordinate.
  static double logistic_coordinate_logpdf(const LogisticData& law, double u);

 private:
  std::size_t dim_;
  std::variant<LogisticData, Gaussian> law_;
};

/// Exponentially tilted proposal q_{j,k}(t) = e^{t_j} f(t - s) / e^{s_j}, with
/// f the factor generator density and s_i = ln(a_ik / m_k).
class TiltedProposal {
 public:
  TiltedProposal(const FactorGenerator& generator, Vector shifts, std::size_t tilt_position);

  std::size_t tilt_position() const { return tilt_; }
  const Vector& shifts() const { return shifts_; }
  /// Gaussian of the tilted law (Hüsler–Reiss factors only).
  const Gaussian& tilted_gaussian() const { return std::get<Gaussian>(law_); }

  Vector sample(Rng& rng) const;
  double logpdf(const Vector& t) const;

 private:
  struct LogisticTilt {
    FactorGenerator::LogisticData law;
  };

  std::size_t tilt_;
  Vector shifts_;
  std::variant<LogisticTilt, Gaussian> law_;
};

/// Draw from the U-generator of one factor.
Vector sample_factor_generator(const FactorGenerator& generator, Rng& rng);

/// n_{j,k} = a_jk / sum_i a_ik over the signature of column k.
std::vector<double> tilt_weights(const MixtureModel& model, std::size_t k);

Vector sample_tilted(const TiltedProposal& proposal, Rng& rng);
double eval_tilted_logdensity(const TiltedProposal& proposal, const Vector& t);

/// Draw from the mixture U-generator: column k with probability m_k, then
/// U^(k) + ln(a_.k / m_k) on its signature, -inf elsewhere.
MgpPoint sample_mixture_generator(const MixtureModel& model, Rng& rng);

/// Log density of the mixture generator with respect to the sum of Lebesgue
/// measures on the faces; -inf if the support is not a signature.
double mixture_generator_logpdf(const MixtureModel& model, const MgpPoint& u);

}  // namespace mgp
