#include "pmc/pqcheck.hpp"

namespace pmc {

EpochState::EpochState(std::uint32_t epochs) : epochs_(epochs) {
  if (epochs > 0) runs_.push_back({1, 0});
}

void EpochState::begin_epoch() {
  if (current_ == epochs_) {
    throw CapacityError("epoch " + std::to_string(current_ + 1) + " exceeds the " +
                        std::to_string(epochs_) + " epochs the checker was sized for");
  }
  ++current_;
}

std::uint32_t EpochState::assign(Value u) const {
  auto it = std::partition_point(runs_.begin(), runs_.end(), [u](const Run& r) { return r.value > u; });
  // The last run is always 0, so some run qualifies.
  return it->first;
}

Value EpochState::f(std::uint32_t k) const {
  auto it = std::partition_point(runs_.begin(), runs_.end(), [k](const Run& r) { return r.first <= k; });
  return std::prev(it)->value;
}

std::optional<EpochState::Range> EpochState::raise(Value u) {
  if (current_ <= 1) return std::nullopt;
  const std::uint32_t last = current_ - 1;
  // Runs below u form a suffix; they cover [first, epochs] and only the part
  // before the current epoch is raised.
  auto it = std::partition_point(runs_.begin(), runs_.end(), [u](const Run& r) { return r.value >= u; });
  const std::uint32_t first = it->first;
  if (first > last) return std::nullopt;
  runs_.erase(it, runs_.end());
  if (runs_.empty() || runs_.back().value != u) runs_.push_back({first, u});
  runs_.push_back({current_, 0});
  return Range{first, last};
}

}  // namespace pmc
