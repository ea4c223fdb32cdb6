#pragma once

#include <cstddef>
#include <vector>

#include "mgp/signature.hpp"

namespace mgp {

/// Point of [-inf, inf)^d: the coordinates in `support` are finite and hold
/// `values` (in support order); every other coordinate is -inf.
struct MgpPoint {
  Signature support;
  std::vector<double> values;

  double max_value() const;
  /// Value of component `j`, -inf off the support.
  double coordinate(std::size_t j) const;
  /// Dense d-vector with -inf off the support.
  std::vector<double> to_dense(std::size_t d) const;
  /// Inverse of to_dense; throws PreconditionError if every entry is -inf or
  /// any entry is NaN or +inf.
  static MgpPoint from_dense(const std::vector<double>& dense);
};

}  // namespace mgp
