#include "mgp/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mgp/errors.hpp"
#include "mgp/stdf.hpp"

namespace mgp {

namespace {

void check_matrix(const Matrix& a) {
  if (a.rows() < 1 || a.cols() < 1)
    throw ShapeError("coefficient matrix must have at least one row and one column");
  for (Eigen::Index j = 0; j < a.rows(); ++j) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const double v = a(j, k);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << "entry (" << j + 1 << "," << k + 1 << ") = " << v << " is outside [0,1]";
        throw BadCoefficient(msg.str());
      }
    }
    const double sum = a.row(j).sum();
    if (std::abs(sum - 1.0) > 1e-9) {
      std::ostringstream msg;
      msg << "row " << j + 1 << " sums to " << sum;
      throw RowSumError(msg.str());
    }
  }
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    if (!(a.col(k).sum() > 0.0)) {
      std::ostringstream msg;
      msg << "column " << k + 1 << " is identically zero";
      throw EmptyColumnError(msg.str());
    }
  }
}

std::vector<double> check_masses(std::optional<std::vector<double>> masses, std::size_t r) {
  if (!masses) return std::vector<double>(r, 1.0 / static_cast<double>(r));
  if (masses->size() != r) throw ShapeError("mass vector length differs from column count");
  double sum = 0.0;
  for (double m : *masses) {
    // m_k = 1 is only reachable, and only allowed, when r = 1.
    if (!(m > 0.0 && (m < 1.0 || (r == 1 && m == 1.0))))
      throw BadMass("masses must lie in (0,1)");
    sum += m;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw BadMass("masses must sum to 1");
  return *masses;
}

FactorFamily check_family(const FactorFamily& family, std::size_t k, std::size_t size) {
  std::ostringstream where;
  where << "column " << k + 1 << ": ";
  if (const auto* lg = std::get_if<Logistic>(&family)) {
    if (!(lg->alpha > 0.0 && lg->alpha < 1.0))
      throw BadAlpha(where.str() + "alpha must lie in (0,1)");
    return family;
  }
  Matrix g = std::get<HueslerReiss>(family).variogram;
  if (g.rows() == 0 && g.cols() == 0 && size == 1) g = Matrix::Zero(1, 1);
  if (static_cast<std::size_t>(g.rows()) != size || static_cast<std::size_t>(g.cols()) != size) {
    std::ostringstream msg;
    msg << where.str() << "variogram is " << g.rows() << "x" << g.cols()
        << " but the signature has " << size << " members";
    throw BadVariogram(msg.str());
  }
  try {
    check_variogram(g);
  } catch (const BadVariogram& e) {
    throw BadVariogram(where.str() + e.what());
  }
  return HueslerReiss{std::move(g)};
}

}  // namespace

MixtureModel validate(const Matrix& matrix, std::vector<FactorFamily> families,
                      std::optional<std::vector<double>> masses, const ModelOptions& options) {
  check_matrix(matrix);
  const auto d = static_cast<std::size_t>(matrix.rows());
  const auto r = static_cast<std::size_t>(matrix.cols());
  if (families.size() != r) throw ShapeError("need exactly one factor family per column");
  if (!(options.covariance_shift > 0.0)) throw BadVariogram("covariance shift must be positive");
  if (!(options.mvn_tol > 0.0)) throw ShapeError("mvn tolerance must be positive");

  MixtureModel model;
  model.matrix_ = matrix;
  model.masses_ = check_masses(std::move(masses), r);
  model.options_ = options;

  for (std::size_t k = 0; k < r; ++k) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < d; ++j)
      if (matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) > 0.0)
        members.push_back(j);
    Signature sig(std::move(members));
    const std::size_t size = sig.size();
    FactorFamily family = check_family(families[k], k, size);

    Vector coeffs(static_cast<Eigen::Index>(size));
    for (std::size_t i = 0; i < size; ++i)
      coeffs(static_cast<Eigen::Index>(i)) =
          matrix(static_cast<Eigen::Index>(sig[i]), static_cast<Eigen::Index>(k));
    FactorGenerator generator(family, size, options.covariance_shift);
    const Vector shifts = (coeffs / model.masses_[k]).array().log().matrix();
    std::vector<double> tilt(size);
    for (std::size_t i = 0; i < size; ++i)
      tilt[i] = coeffs(static_cast<Eigen::Index>(i)) / coeffs.sum();
    std::vector<TiltedProposal> proposals;
    proposals.reserve(size);
    for (std::size_t i = 0; i < size; ++i) proposals.emplace_back(generator, shifts, i);

    model.columns_.push_back(Column{std::move(sig), std::move(coeffs), std::move(family),
                                    std::move(generator), shifts, std::move(tilt),
                                    std::move(proposals)});
  }

  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t k2 = 0; k2 < k; ++k2) {
      if (model.columns_[k].signature == model.columns_[k2].signature) {
        std::ostringstream msg;
        msg << "columns " << k2 + 1 << " and " << k + 1 << " share the signature "
            << model.columns_[k].signature.to_string();
        model.warnings_.push_back(msg.str());
        break;
      }
    }
  }

  model.weights_ = compute_face_weights(model.columns_, options.mvn_tol);
  return model;
}

std::vector<Signature> signatures(const MixtureModel& model) {
  std::vector<Signature> out;
  for (const Column& c : model.columns()) out.push_back(c.signature);
  return out;
}

std::vector<Signature> extreme_directions(const MixtureModel& model) {
  std::vector<Signature> out;
  for (const Column& c : model.columns())
    if (std::find(out.begin(), out.end(), c.signature) == out.end()) out.push_back(c.signature);
  return out;
}

bool chi_positive(const MixtureModel& model, const Signature& j) {
  return std::any_of(model.columns().begin(), model.columns().end(),
                     [&](const Column& c) { return j.is_subset_of(c.signature); });
}

}  // namespace mgp
