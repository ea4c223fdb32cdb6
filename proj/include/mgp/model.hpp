#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgp/family.hpp"
#include "mgp/generators.hpp"
#include "mgp/linalg.hpp"
#include "mgp/signature.hpp"

namespace mgp {

struct ModelOptions {
  /// Constant c in the variogram-to-covariance construction.
  double covariance_shift = 1.0;
  /// Standard-error target for multivariate normal CDFs in stdf evaluation.
  double mvn_tol = 1e-6;
};

/// Probabilities w_k that a sample lies on the face of column k, and the
/// normalising constant l(1) they share.
struct FaceWeights {
  std::vector<double> weights;
  double ell_one = 0.0;
};

/// Everything cached for one column of the coefficient matrix.
struct Column {
  Signature signature;
  Vector coefficients;      // a_jk for j in the signature, in signature order
  FactorFamily family;      // Hüsler–Reiss variograms normalised to |J_k| x |J_k|
  FactorGenerator generator;
  Vector shifts;            // ln(a_jk / m_k)
  std::vector<double> tilt_weights;
  std::vector<TiltedProposal> proposals;  // one per tilt position
};

/// Validated mixture model. Immutable once built; construct with validate().
class MixtureModel {
 public:
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t factors() const { return columns_.size(); }

  const Matrix& matrix() const { return matrix_; }
  double coefficient(std::size_t j, std::size_t k) const {
    return matrix_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
  }
  const std::vector<double>& masses() const { return masses_; }
  const Column& column(std::size_t k) const { return columns_[k]; }
  const std::vector<Column>& columns() const { return columns_; }
  const FactorFamily& family(std::size_t k) const { return columns_[k].family; }
  const Signature& signature(std::size_t k) const { return columns_[k].signature; }

  const FaceWeights& face_weights() const { return weights_; }
  double ell_one() const { return weights_.ell_one; }
  const ModelOptions& options() const { return options_; }
  /// Non-fatal findings from validation (duplicate signatures).
  const std::vector<std::string>& warnings() const { return warnings_; }

  friend MixtureModel validate(const Matrix&, std::vector<FactorFamily>,
                               std::optional<std::vector<double>>, const ModelOptions&);

 private:
  MixtureModel() = default;

  Matrix matrix_;
  std::vector<double> masses_;
  std::vector<Column> columns_;
  FaceWeights weights_;
  ModelOptions options_;
  std::vector<std::string> warnings_;
};

/// Validates a d x r coefficient matrix with one family per column and an
/// optional mass vector (default 1/r each), and precomputes signatures,
/// generator caches, l(1) and the face weights.
///
/// Throws a ValidationError subclass: ShapeError, BadCoefficient (entry
/// outside [0,1]), RowSumError, EmptyColumnError, BadAlpha, BadVariogram or
/// BadMass. Numerical failures in the weight computation propagate.
MixtureModel validate(const Matrix& matrix, std::vector<FactorFamily> families,
                      std::optional<std::vector<double>> masses = std::nullopt,
                      const ModelOptions& options = {});

std::vector<Signature> signatures(const MixtureModel& model);

/// Distinct signatures, in order of first appearance.
std::vector<Signature> extreme_directions(const MixtureModel& model);

/// True iff J lies inside some extreme direction, i.e. the tail dependence
/// coefficient chi_J is positive.
bool chi_positive(const MixtureModel& model, const Signature& j);

}  // namespace mgp
