#pragma once

#include <cstddef>
#include <deque>

#include "conegb/constraints.hpp"

namespace conegb {

/// Constraint sets known to be inconsistent with the current program lineage.
///
/// A set L_U is stored once the base program was consistent but base u L_U
/// was not. Because the base only grows, any later candidate extension L_V
/// with L_U contained in L_V, or in base u L_V, is inconsistent too. Bounded,
/// with first-in first-out eviction.
class RejectRegistry {
 public:
  static constexpr std::size_t kDefaultCapacity = 1024;

  explicit RejectRegistry(std::size_t capacity = kDefaultCapacity);

  /// Throws std::invalid_argument for an empty set. Re-registering a stored
  /// set is a no-op.
  void register_reject(const ConstraintSet& failed);

  bool is_rejected(const ConstraintSet& candidate, const ConstraintSet& base) const;
  bool is_rejected(const ConstraintSet& candidate, const ConstraintSystem& base) const {
    return is_rejected(candidate, base.as_set());
  }

  bool contains(const ConstraintSet& s) const;
  std::size_t size() const noexcept { return stored_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }

 private:
  std::size_t capacity_;
  std::deque<ConstraintSet> stored_;
};

}  // namespace conegb
