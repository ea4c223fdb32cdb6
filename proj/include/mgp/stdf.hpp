#pragma once

#include <cstdint>
#include <span>

#include "mgp/family.hpp"
#include "mgp/model.hpp"

namespace mgp {

struct StdfOptions {
  double mvn_tol = 1e-6;
  /// Base seed; the normal CDF for summand j uses derive_seed(seed, j).
  std::uint64_t seed = 0;
};

/// Stable tail dependence function of one factor over its signature.
///
/// Logistic: (sum_j y_j^(1/alpha))^alpha. Hüsler–Reiss:
/// sum_j y_j Phi(eta^j(y); Sigma^j) with eta^j_s = ln(y_j / y_s) + G_js / 2,
/// +inf where y_s = 0, and a zero summand where y_j = 0. Singletons: y.
/// Throws NegativeInput.
double factor_stdf(const FactorFamily& family, std::span<const double> y,
                   const StdfOptions& options = {});

/// sum_k l^(k)((a_jk y_j)_{j in J_k}). Throws NegativeInput.
double mixture_stdf(const MixtureModel& model, std::span<const double> y);

/// Computes w_k = l^(k)((a_jk)_j) / l(1) from scratch; seeds depend only on
/// the column and summand index, so the result is reproducible.
FaceWeights compute_face_weights(const std::vector<Column>& columns, double mvn_tol);

/// Cached weights of a validated model.
const FaceWeights& face_weights(const MixtureModel& model);

}  // namespace mgp
