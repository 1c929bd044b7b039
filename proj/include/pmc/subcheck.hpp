#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "pmc/operation.hpp"

namespace pmc {

/// Canonical form of a locally consistent block: ascending extracts, at most
/// one matched insert/extract pair, then ascending inserts.
struct GammaBlock {
  std::vector<Value> extracts;
  std::optional<Value> matched_max;
  std::vector<Value> inserts;

  Transcript to_operations() const;
  std::size_t size() const { return extracts.size() + inserts.size() + (matched_max ? 2 : 0); }

  friend bool operator==(const GammaBlock&, const GammaBlock&) = default;
};

struct LocallyInconsistent {
  enum class Rule : std::uint8_t {
    /// An extract exceeded a value still pending in the block.
    SmallerValuePending,
    /// An unmatched extract fell below a value already extracted.
    BelowEarlierExtract,
  };
  /// 1-based position within the block.
  std::size_t position = 0;
  Rule rule = Rule::SmallerValuePending;

  friend bool operator==(const LocallyInconsistent&, const LocallyInconsistent&) = default;
};

using SubCheckResult = std::variant<GammaBlock, LocallyInconsistent>;

/// Incremental local-consistency test over one block; emits the canonical
/// form once the block is complete.
class SubChecker {
 public:
  /// Consumes the next block operation. Returns the violation if the block is
  /// not locally consistent; the checker must not be fed further after that.
  std::optional<LocallyInconsistent> push(const Operation& op);

  /// Canonical form of everything pushed so far; resets for the next block.
  GammaBlock finish();

  /// Values currently held (pending inserts plus unmatched extracts).
  std::size_t working_size() const { return pending_.size() + unmatched_.size(); }
  std::size_t consumed() const { return consumed_; }

 private:
  std::multiset<Value> pending_;   // inserted, not yet extracted; empty acts as the top element
  std::vector<Value> unmatched_;   // extracts with no insert in the block, non-decreasing
  Value last_unmatched_ = 0;       // f
  Value matched_max_ = 0;          // w; 0 means no matched pair yet
  std::size_t consumed_ = 0;
};

/// Tests local consistency of `block` and computes its canonical form.
/// Throws KindError for operations other than Ins/Ext.
SubCheckResult sub_check(std::span<const Operation> block);

}  // namespace pmc
