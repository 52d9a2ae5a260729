#include "dforge/nested_real.hpp"

#include "dforge/error.hpp"

namespace dforge {

std::optional<std::size_t> first_nesting_violation(const std::vector<IntervalQ>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!chain[i + 1].is_subset_of(chain[i])) return i + 1;
  }
  return std::nullopt;
}

NestedReal::NestedReal(std::vector<IntervalQ> chain, std::optional<WidthSchedule> schedule)
    : chain_(std::move(chain)), schedule_(std::move(schedule)) {
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (!chain_[i].is_closed()) {
      throw Error(ErrorCode::nesting_violation,
                  "chain link " + std::to_string(i + 1) + " is not closed: " + chain_[i].to_string());
    }
  }
  if (auto bad = first_nesting_violation(chain_)) {
    throw Error(ErrorCode::nesting_violation,
                "nesting violated at link " + std::to_string(*bad) + ": " +
                    chain_[*bad].to_string() + " not inside " + chain_[*bad - 1].to_string(),
                chain_[*bad].to_string());
  }
  if (schedule_) {
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      const Rational limit = schedule_->bound(i + 1);
      if (limit < chain_[i].width()) {
        throw Error(ErrorCode::nesting_violation,
                    "width of link " + std::to_string(i + 1) + " exceeds schedule " +
                        schedule_->label + " (" + chain_[i].width().to_string() + " > " +
                        limit.to_string() + ")");
      }
    }
  }
}

const IntervalQ& NestedReal::last() const {
  if (chain_.empty()) throw Error(ErrorCode::index, "empty chain");
  return chain_.back();
}

const IntervalQ& NestedReal::refine(std::size_t k) const {
  if (k == 0 || k > chain_.size()) {
    throw Error(ErrorCode::index, "refine index " + std::to_string(k) + " outside chain of length " +
                                      std::to_string(chain_.size()));
  }
  return chain_[k - 1];
}

}  // namespace dforge
