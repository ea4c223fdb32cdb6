#pragma once

#include <cstddef>

#include "mgp/linalg.hpp"
#include "mgp/model.hpp"
#include "mgp/point.hpp"

namespace mgp {

/// Log density of the mgp vector with respect to the sum of Lebesgue measures
/// on the faces, in closed form. -inf when max(values) < 0 or when the
/// support is not a signature of the model.
double log_density(const MixtureModel& model, const MgpPoint& p);

/// Log of the Hüsler–Reiss exponent measure density (Gumbel margins) at x,
/// computed by conditioning on coordinate `anchor`. Every anchor yields the
/// same function; 1x1 and 0x0 variograms give exp(-x).
double huesler_reiss_log_exponent_density(const Vector& x, const Matrix& variogram,
                                          std::size_t anchor);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Density by direct integration of the mixture generator density:
/// 1{max y >= 0} / l(1) * int f_U(y + r) e^r dr. The boundary max y = 0 is a
/// null set; it gets the continuous extension from inside the support.
/// Throws QuadratureFailure when the error estimate exceeds
/// max(quad_tol, 1e-9 * value).
QuadratureResult density_oracle(const MixtureModel& model, const MgpPoint& p,
                                double quad_tol = 1e-12);

/// Probability that a sample lies on the face of column k; columns sharing a
/// signature are aggregated.
double face_mass(const MixtureModel& model, std::size_t k);

}  // namespace mgp
