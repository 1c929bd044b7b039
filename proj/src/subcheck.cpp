#include "pmc/subcheck.hpp"

#include <algorithm>

#include "pmc/errors.hpp"

namespace pmc {

Transcript GammaBlock::to_operations() const {
  Transcript ops;
  ops.reserve(size());
  for (Value v : extracts) ops.push_back(Operation::ext(v));
  if (matched_max) {
    ops.push_back(Operation::ins(*matched_max));
    ops.push_back(Operation::ext(*matched_max));
  }
  for (Value u : inserts) ops.push_back(Operation::ins(u));
  return ops;
}

std::optional<LocallyInconsistent> SubChecker::push(const Operation& op) {
  ++consumed_;
  if (op.kind == OpKind::Ins) {
    pending_.insert(op.value);
    return std::nullopt;
  }
  if (op.kind != OpKind::Ext) throw KindError("block operations must be plain inserts or extracts");

  const Value v = op.value;
  if (!pending_.empty()) {
    const auto smallest = pending_.begin();
    if (v > *smallest) return LocallyInconsistent{consumed_, LocallyInconsistent::Rule::SmallerValuePending};
    if (v == *smallest) {
      pending_.erase(smallest);
      matched_max_ = std::max(matched_max_, v);
      return std::nullopt;
    }
  }
  if (v < std::max(last_unmatched_, matched_max_)) {
    return LocallyInconsistent{consumed_, LocallyInconsistent::Rule::BelowEarlierExtract};
  }
  last_unmatched_ = v;
  unmatched_.push_back(v);
  return std::nullopt;
}

GammaBlock SubChecker::finish() {
  GammaBlock gamma;
  gamma.extracts = std::move(unmatched_);
  if (matched_max_ != 0) gamma.matched_max = matched_max_;
  gamma.inserts.assign(pending_.begin(), pending_.end());
  *this = SubChecker{};
  return gamma;
}

SubCheckResult sub_check(std::span<const Operation> block) {
  SubChecker checker;
  for (const auto& op : block) {
    if (auto bad = checker.push(op)) return *bad;
  }
  return checker.finish();
}

}  // namespace pmc
