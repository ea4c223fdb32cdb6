#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace mgp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Lower Cholesky factor with positive diagonal.
///
/// Throws NotPositiveDefinite when the input is not symmetric or when a pivot
/// falls to 1e-14 times the largest diagonal entry or below. No jitter is ever
/// added.
Matrix cholesky(const Matrix& c);

/// Sum of log diagonal entries of a Cholesky factor, i.e. half of log det.
double half_log_det(const Matrix& lower);

/// Solves L x = b for lower-triangular L.
Vector solve_lower(const Matrix& lower, const Vector& b);

/// Throws BadVariogram unless `g` is symmetric, zero on the diagonal and
/// conditionally negative definite.
void check_variogram(const Matrix& g);

/// Entrywise Sigma_ss + Sigma_tt - 2 Sigma_st.
Matrix variogram_of(const Matrix& cov);

/// Covariance with variogram `g`: -1/2 P g P + shift * 11^T, P the centering
/// projection. Any shift > 0 gives a valid covariance for the same variogram.
Matrix variogram_to_covariance(const Matrix& g, double shift = 1.0);

/// Matrix with entries (g_js + g_jt - g_st) / 2 over s, t != anchor; this is
/// the covariance of (U_s - U_anchor)_s for any U with variogram g.
Matrix anchored_sigma(const Matrix& g, std::size_t anchor);

}  // namespace mgp
