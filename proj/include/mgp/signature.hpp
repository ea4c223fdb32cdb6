#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mgp {

/// Nonempty set of component indices, stored sorted and 0-based. Printed
/// 1-based, e.g. "{1,2,3}".
class Signature {
 public:
  /// Members are sorted and deduplicated; throws PreconditionError if empty.
  explicit Signature(std::vector<std::size_t> members);
  Signature(std::initializer_list<std::size_t> members)
      : Signature(std::vector<std::size_t>(members)) {}

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t operator[](std::size_t i) const { return members_[i]; }
  std::size_t back() const { return members_.back(); }

  bool contains(std::size_t component) const;
  /// Position of `component` within the sorted members, or size() if absent.
  std::size_t position(std::size_t component) const;
  bool is_subset_of(const Signature& other) const;

  std::string to_string() const;

  auto operator<=>(const Signature&) const = default;
  bool operator==(const Signature&) const = default;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<std::size_t> members_;
};

}  // namespace mgp
