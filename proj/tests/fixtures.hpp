#pragma once

#include <vector>

#include "mgp/model.hpp"

namespace mgp::testing {

// Triangular 3x3 coefficient matrix with signatures {1,2,3}, {2,3}, {3}.
inline Matrix triangular_matrix() {
  Matrix a(3, 3);
  a << 1.0, 0.0, 0.0,
       0.5, 0.5, 0.0,
       1.0 / 3, 1.0 / 3, 1.0 / 3;
  return a;
}

inline Matrix exchangeable_variogram(std::size_t m, double gamma) {
  Matrix g = Matrix::Constant(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m), gamma);
  g.diagonal().setZero();
  return g;
}

inline MixtureModel triangular_logistic(double alpha = 0.5,
                                        std::optional<std::vector<double>> masses = {}) {
  return validate(triangular_matrix(), {Logistic{alpha}, Logistic{alpha}, Logistic{alpha}},
                  std::move(masses));
}

inline MixtureModel triangular_huesler_reiss(double gamma = 1.38,
                                             std::optional<std::vector<double>> masses = {},
                                             ModelOptions options = {}) {
  return validate(triangular_matrix(),
                  {HueslerReiss{exchangeable_variogram(3, gamma)},
                   HueslerReiss{exchangeable_variogram(2, gamma)}, HueslerReiss{Matrix(0, 0)}},
                  std::move(masses), options);
}

inline MixtureModel independence(std::size_t d = 3) {
  const auto n = static_cast<Eigen::Index>(d);
  return validate(Matrix::Identity(n, n), std::vector<FactorFamily>(d, Logistic{0.5}));
}

}  // namespace mgp::testing
