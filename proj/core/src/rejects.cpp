#include "conegb/rejects.hpp"

#include <algorithm>
#include <stdexcept>

namespace conegb {

RejectRegistry::RejectRegistry(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("RejectRegistry: capacity must be positive");
}

void RejectRegistry::register_reject(const ConstraintSet& failed) {
  if (failed.empty())
    throw std::invalid_argument("RejectRegistry: an empty extension cannot be inconsistent");
  if (contains(failed)) return;
  if (stored_.size() == capacity_) stored_.pop_front();
  stored_.push_back(failed);
}

bool RejectRegistry::contains(const ConstraintSet& s) const {
  return std::find(stored_.begin(), stored_.end(), s) != stored_.end();
}

bool RejectRegistry::is_rejected(const ConstraintSet& candidate, const ConstraintSet& base) const {
  for (const auto& rejected : stored_) {
    const bool covered = std::all_of(rejected.begin(), rejected.end(), [&](const Constraint& c) {
      return candidate.count(c) != 0 || base.count(c) != 0;
    });
    if (covered) return true;
  }
  return false;
}

}  // namespace conegb
