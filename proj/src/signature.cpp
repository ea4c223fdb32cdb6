#include "mgp/signature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgp/errors.hpp"
#include "mgp/point.hpp"

namespace mgp {

Signature::Signature(std::vector<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionError("signature must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Signature::contains(std::size_t component) const {
  return std::binary_search(members_.begin(), members_.end(), component);
}

std::size_t Signature::position(std::size_t component) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), component);
  if (it == members_.end() || *it != component) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

bool Signature::is_subset_of(const Signature& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string Signature::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i] + 1);
  }
  return out + "}";
}

double MgpPoint::max_value() const { return *std::max_element(values.begin(), values.end()); }

double MgpPoint::coordinate(std::size_t j) const {
  const std::size_t pos = support.position(j);
  return pos < values.size() ? values[pos] : -std::numeric_limits<double>::infinity();
}

std::vector<double> MgpPoint::to_dense(std::size_t d) const {
  std::vector<double> out(d, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < support.size(); ++i) out[support[i]] = values[i];
  return out;
}

MgpPoint MgpPoint::from_dense(const std::vector<double>& dense) {
  std::vector<std::size_t> members;
  std::vector<double> values;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    const double v = dense[j];
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity())
      throw PreconditionError("point coordinates must be finite or -inf");
    if (v == -std::numeric_limits<double>::infinity()) continue;
    members.push_back(j);
    values.push_back(v);
  }
  if (members.empty()) throw PreconditionError("point has no finite coordinate");
  return {Signature(std::move(members)), std::move(values)};
}

}  // namespace mgp
