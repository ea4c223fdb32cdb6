#include "mgp/linalg.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "mgp/errors.hpp"

namespace mgp {

namespace {

bool is_symmetric(const Matrix& a, double rel_tol) {
  if (a.size() == 0) return true;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (std::abs(a(i, j) - a(j, i)) > rel_tol * scale) return false;
  return true;
}

}  // namespace

Matrix cholesky(const Matrix& c) {
  if (c.rows() != c.cols())
    throw NotPositiveDefinite("matrix is not square");
  if (!c.allFinite()) throw NotPositiveDefinite("matrix has non-finite entries");
  if (!is_symmetric(c, 1e-12)) throw NotPositiveDefinite("matrix is not symmetric");

  const Eigen::Index n = c.rows();
  Matrix l = Matrix::Zero(n, n);
  if (n == 0) return l;
  const double threshold = 1e-14 * c.diagonal().maxCoeff();
  for (Eigen::Index j = 0; j < n; ++j) {
    double pivot = c(j, j);
    for (Eigen::Index k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > threshold) || !(pivot > 0.0)) {
      std::ostringstream msg;
      msg << "pivot " << j << " is " << pivot;
      throw NotPositiveDefinite(msg.str());
    }
    const double ljj = std::sqrt(pivot);
    l(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = c(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

double half_log_det(const Matrix& lower) {
  return lower.diagonal().array().log().sum();
}

Vector solve_lower(const Matrix& lower, const Vector& b) {
  return lower.triangularView<Eigen::Lower>().solve(b);
}

void check_variogram(const Matrix& g) {
  if (g.rows() != g.cols()) throw BadVariogram("variogram is not square");
  if (!g.allFinite()) throw BadVariogram("variogram has non-finite entries");
  if (!is_symmetric(g, 1e-12)) throw BadVariogram("variogram is not symmetric");
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    if (g(i, i) != 0.0) throw BadVariogram("variogram diagonal must be zero");
  const Eigen::Index m = g.rows();
  if (m <= 1) return;

  const Matrix centering = Matrix::Identity(m, m) - Matrix::Constant(m, m, 1.0 / m);
  const Matrix s = -0.5 * centering * g * centering;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  const Vector& ev = eig.eigenvalues();  // ascending
  // The all-ones direction is always in the kernel; every other direction
  // must be strictly positive.
  if (ev(0) < -1e-10 || std::abs(ev(0)) > 1e-10 || !(ev(1) > 1e-10)) {
    std::ostringstream msg;
    msg << "variogram is not conditionally negative definite (eigenvalues "
        << ev(0) << ", " << ev(1) << ")";
    throw BadVariogram(msg.str());
  }
}

Matrix variogram_of(const Matrix& cov) {
  const Eigen::Index m = cov.rows();
  Matrix g(m, m);
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index t = 0; t < m; ++t)
      g(s, t) = cov(s, s) + cov(t, t) - 2.0 * cov(s, t);
  return g;
}

Matrix variogram_to_covariance(const Matrix& g, double shift) {
  const Eigen::Index m = g.rows();
  if (m < 1) throw BadVariogram("variogram must have dimension at least 1");
  if (!(shift > 0.0)) throw BadVariogram("covariance shift must be positive");
  const Matrix centering = Matrix::Identity(m, m) - Matrix::Constant(m, m, 1.0 / m);
  Matrix cov = -0.5 * centering * g * centering;
  cov.array() += shift;
  cov = 0.5 * (cov + cov.transpose());
  try {
    cholesky(cov);
  } catch (const NotPositiveDefinite& e) {
    throw BadVariogram(std::string("covariance from variogram failed: ") + e.what());
  }
  return cov;
}

Matrix anchored_sigma(const Matrix& g, std::size_t anchor) {
  const auto m = static_cast<std::size_t>(g.rows());
  if (m < 2 || anchor >= m)
    throw PreconditionError("anchored_sigma needs dimension >= 2 and a valid anchor");
  Matrix out(m - 1, m - 1);
  Eigen::Index a = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (s == anchor) continue;
    Eigen::Index b = 0;
    for (std::size_t t = 0; t < m; ++t) {
      if (t == anchor) continue;
      out(a, b) = 0.5 * (g(anchor, s) + g(anchor, t) - g(s, t));
      ++b;
    }
    ++a;
  }
  cholesky(out);  // throws NotPositiveDefinite for an invalid variogram
  return out;
}

}  // namespace mgp
