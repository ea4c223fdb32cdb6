#pragma once

#include <string>
#include <variant>

#include "mgp/linalg.hpp"

namespace mgp {

/// Symmetric logistic factor, 0 < alpha < 1.
struct Logistic {
  double alpha;
};

/// Hüsler–Reiss factor parameterised by its variogram over the sorted members
/// of the column signature. A singleton signature takes a 0x0 (or 1x1 zero)
/// variogram.
struct HueslerReiss {
  Matrix variogram;
};

using FactorFamily = std::variant<Logistic, HueslerReiss>;

inline std::string family_name(const FactorFamily& f) {
  return std::holds_alternative<Logistic>(f) ? "logistic" : "huesler_reiss";
}

}  // namespace mgp
