#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "pmc/errors.hpp"
#include "pmc/fingerprint.hpp"
#include "pmc/operation.hpp"
#include "pmc/verdict.hpp"

namespace pmc {

namespace detail {

/// Position counter plus the first rejection seen.
class RejectLatch {
 public:
  std::uint64_t advance() { return ++position_; }
  std::uint64_t position() const { return position_; }
  bool rejected() const { return rejection_.has_value(); }
  void reject(std::string reason) {
    if (!rejection_) rejection_ = Verdict::reject(std::move(reason), position_);
  }
  const std::optional<Verdict>& rejection() const { return rejection_; }

 private:
  std::uint64_t position_ = 0;
  std::optional<Verdict> rejection_;
};

inline void require_value(Value u, Value universe) {
  if (u == 0 || u > universe) {
    throw FormatError("value " + std::to_string(u) + " outside the universe [1, " +
                      std::to_string(universe) + "]");
  }
}

}  // namespace detail

/// FIFO check: the i-th insert and the i-th extract carry the same value.
/// Both sequences are summarized with ordinals as indices and values as
/// coefficients.
template <CellAccumulator Acc>
class BasicQueueChecker {
 public:
  BasicQueueChecker(std::uint64_t length, const Acc& prototype)
      : length_(length), inserted_(prototype.resized(length)), extracted_(inserted_) {}

  void push(const Operation& op) {
    latch_.advance();
    if (op.kind != OpKind::Ins && op.kind != OpKind::Ext) {
      throw KindError("queue transcripts use plain inserts and extracts");
    }
    if (latch_.position() > length_) throw FormatError("more operations than the declared length");
    if (latch_.rejected()) return;
    const auto delta = static_cast<std::int64_t>(op.value);
    if (op.kind == OpKind::Ins) {
      inserted_.add(++inserts_, delta);
    } else {
      if (extracts_ == inserts_) return latch_.reject("extract from an empty queue");
      extracted_.add(++extracts_, delta);
    }
  }

  Verdict finish() const {
    if (latch_.rejected()) return *latch_.rejection();
    if (inserts_ != extracts_) return Verdict::reject("queue not empty at end");
    if (!inserted_.matches(extracted_)) return Verdict::reject("extract order differs from insert order");
    return Verdict::accept();
  }

  bool rejected() const { return latch_.rejected(); }
  std::size_t peak_state_cells() const { return 4; }
  double error_bound() const { return inserted_.error_bound(); }

 private:
  std::uint64_t length_;
  Acc inserted_, extracted_;
  std::uint64_t inserts_ = 0, extracts_ = 0;
  detail::RejectLatch latch_;
};

/// LIFO check in blocks: pairs are matched inside a block; leftover extracts
/// are cancelled against a stack of hashed (item, height) entries and
/// leftover inserts become one new entry.
template <CellAccumulator Acc>
class BasicStackChecker {
 public:
  BasicStackChecker(std::uint64_t length, Value universe, std::uint64_t block_length, const Acc& prototype)
      : universe_(universe),
        block_length_(block_length),
        zero_(prototype.resized(std::max<std::uint64_t>(length, 1) * universe - 1)) {
    if (universe == 0) throw ParamError("universe must be positive");
    if (block_length == 0) throw ParamError("block length must be positive");
  }

  void push(const Operation& op) {
    latch_.advance();
    if (op.kind != OpKind::Ins && op.kind != OpKind::Ext) {
      throw KindError("stack transcripts use plain inserts and extracts");
    }
    detail::require_value(op.value, universe_);
    if (!latch_.rejected()) apply(op);
    if (++in_block_ == block_length_) flush();
  }

  Verdict finish() {
    if (!latch_.rejected()) flush();
    if (latch_.rejected()) return *latch_.rejection();
    if (height_ != 0 || !entries_.empty()) return Verdict::reject("stack not empty at end");
    return Verdict::accept();
  }

  bool rejected() const { return latch_.rejected(); }
  std::size_t state_cells() const { return local_.size() + entries_.size() + 2; }
  std::size_t peak_state_cells() const { return peak_; }
  std::size_t entry_count() const { return entries_.size(); }
  double error_bound() const { return zero_.error_bound(); }

 private:
  struct Entry {
    Acc hash;
    std::uint64_t count;
  };

  std::uint64_t index(Value u, std::uint64_t height) const { return height * universe_ + (u - 1); }

  void apply(const Operation& op) {
    if (op.kind == OpKind::Ins) {
      local_.push_back(op.value);
      peak_ = std::max(peak_, state_cells());
      return;
    }
    if (!local_.empty()) {
      if (local_.back() != op.value) return latch_.reject("extract does not match the top of the stack");
      local_.pop_back();
      return;
    }
    if (entries_.empty()) return latch_.reject("extract from an empty stack");
    Entry& top = entries_.back();
    --height_;
    top.hash.add(index(op.value, height_), -1);
    if (--top.count == 0) {
      if (!top.hash.is_zero()) return latch_.reject("extracted items do not match the stored block");
      entries_.pop_back();
    }
  }

  void flush() {
    in_block_ = 0;
    if (latch_.rejected() || local_.empty()) {
      local_.clear();
      return;
    }
    Entry entry{zero_, local_.size()};
    for (Value u : local_) entry.hash.add(index(u, height_++), 1);
    entries_.push_back(std::move(entry));
    local_.clear();
    peak_ = std::max(peak_, state_cells());
  }

  Value universe_;
  std::uint64_t block_length_;
  Acc zero_;
  std::vector<Value> local_;
  std::vector<Entry> entries_;
  std::uint64_t height_ = 0;
  std::uint64_t in_block_ = 0;
  std::size_t peak_ = 0;
  detail::RejectLatch latch_;
};

/// Two-type parenthesis check: `(`/`)` act as ins(1)/ext(1), `[`/`]` as ins(2)/ext(2).
template <CellAccumulator Acc>
class BasicDyckChecker {
 public:
  BasicDyckChecker(std::uint64_t length, std::uint64_t block_length, const Acc& prototype)
      : stack_(length, 2, block_length, prototype) {}

  void push(const Operation& op) {
    if (!op.is_paren()) throw KindError("Dyck transcripts contain parentheses only");
    const Value u = op.paren == Paren::A ? 1 : 2;
    stack_.push(op.kind == OpKind::Open ? Operation::ins(u) : Operation::ext(u));
  }

  Verdict finish() { return stack_.finish(); }
  std::size_t peak_state_cells() const { return stack_.peak_state_cells(); }
  double error_bound() const { return stack_.error_bound(); }

 private:
  BasicStackChecker<Acc> stack_;
};

/// Double-ended check in blocks. Items live at signed positions: head
/// inserts take head_pos - 1, tail inserts take tail_pos. The stored part of
/// the deque is a deque of hashed (item, position) entries; each block's
/// leftover head inserts and tail inserts become one entry at each end.
template <CellAccumulator Acc>
class BasicDequeChecker {
 public:
  BasicDequeChecker(std::uint64_t length, Value universe, std::uint64_t block_length, const Acc& prototype)
      : universe_(universe),
        offset_(static_cast<std::int64_t>(length)),
        block_length_(block_length),
        zero_(prototype.resized(2 * std::max<std::uint64_t>(length, 1) * universe - 1)) {
    if (universe == 0) throw ParamError("universe must be positive");
    if (block_length == 0) throw ParamError("block length must be positive");
  }

  void push(const Operation& op) {
    latch_.advance();
    switch (op.kind) {
      case OpKind::InsHead:
      case OpKind::InsTail:
      case OpKind::ExtHead:
      case OpKind::ExtTail: break;
      default: throw KindError("deque transcripts use head/tail inserts and extracts");
    }
    detail::require_value(op.value, universe_);
    if (!latch_.rejected()) apply(op);
    if (++in_block_ == block_length_) flush();
  }

  Verdict finish() {
    if (!latch_.rejected()) flush();
    if (latch_.rejected()) return *latch_.rejection();
    if (head_pos_ != tail_pos_ || !entries_.empty()) return Verdict::reject("deque not empty at end");
    return Verdict::accept();
  }

  bool rejected() const { return latch_.rejected(); }
  std::int64_t head_pos() const { return head_pos_; }
  std::int64_t tail_pos() const { return tail_pos_; }
  std::size_t state_cells() const { return local_head_.size() + local_tail_.size() + entries_.size() + 2; }
  std::size_t peak_state_cells() const { return peak_; }
  double error_bound() const { return zero_.error_bound(); }

 private:
  struct Entry {
    Acc hash;
    std::uint64_t count;
  };

  std::uint64_t index(Value u, std::int64_t pos) const {
    return static_cast<std::uint64_t>(pos + offset_) * universe_ + (u - 1);
  }

  // Cancels the item at `pos` against the entry at one end.
  void cancel(Entry& entry, Value u, std::int64_t pos, bool at_head) {
    entry.hash.add(index(u, pos), -1);
    if (--entry.count == 0) {
      if (!entry.hash.is_zero()) return latch_.reject("extracted items do not match the stored block");
      at_head ? entries_.pop_front() : entries_.pop_back();
    }
  }

  void apply(const Operation& op) {
    const Value u = op.value;
    switch (op.kind) {
      case OpKind::InsHead:
        if (head_pos_ <= -offset_) throw FormatError("more operations than the declared length");
        --head_pos_;
        local_head_.push_front(u);
        break;
      case OpKind::InsTail:
        if (tail_pos_ >= offset_) throw FormatError("more operations than the declared length");
        ++tail_pos_;
        local_tail_.push_back(u);
        break;
      case OpKind::ExtHead:
        if (!local_head_.empty()) {
          if (local_head_.front() != u) return latch_.reject("extract does not match the head");
          local_head_.pop_front();
        } else if (!entries_.empty()) {
          cancel(entries_.front(), u, head_pos_, true);
        } else if (!local_tail_.empty()) {
          if (local_tail_.front() != u) return latch_.reject("extract does not match the head");
          local_tail_.pop_front();
        } else {
          return latch_.reject("extract from an empty deque");
        }
        ++head_pos_;
        break;
      case OpKind::ExtTail:
        if (!local_tail_.empty()) {
          if (local_tail_.back() != u) return latch_.reject("extract does not match the tail");
          local_tail_.pop_back();
        } else if (!entries_.empty()) {
          cancel(entries_.back(), u, tail_pos_ - 1, false);
        } else if (!local_head_.empty()) {
          if (local_head_.back() != u) return latch_.reject("extract does not match the tail");
          local_head_.pop_back();
        } else {
          return latch_.reject("extract from an empty deque");
        }
        --tail_pos_;
        break;
      default: break;
    }
    peak_ = std::max(peak_, state_cells());
  }

  void flush() {
    in_block_ = 0;
    if (latch_.rejected()) {
      local_head_.clear();
      local_tail_.clear();
      return;
    }
    if (!local_head_.empty()) {
      Entry entry{zero_, local_head_.size()};
      std::int64_t pos = head_pos_;
      for (Value u : local_head_) entry.hash.add(index(u, pos++), 1);
      entries_.push_front(std::move(entry));
      local_head_.clear();
    }
    if (!local_tail_.empty()) {
      Entry entry{zero_, local_tail_.size()};
      std::int64_t pos = tail_pos_ - static_cast<std::int64_t>(local_tail_.size());
      for (Value u : local_tail_) entry.hash.add(index(u, pos++), 1);
      entries_.push_back(std::move(entry));
      local_tail_.clear();
    }
    peak_ = std::max(peak_, state_cells());
  }

  Value universe_;
  std::int64_t offset_;
  std::uint64_t block_length_;
  Acc zero_;
  std::deque<Value> local_head_, local_tail_;
  std::deque<Entry> entries_;
  std::int64_t head_pos_ = 0, tail_pos_ = 0;
  std::uint64_t in_block_ = 0;
  std::size_t peak_ = 0;
  detail::RejectLatch latch_;
};

enum class Discipline : std::uint8_t { Queue, Stack, Deque };

/// Checks transcripts whose extracts carry the stream position of their
/// matching insert, in O(1) accumulators and scalars.
///
/// Every item gets a coordinate when inserted: its ordinal (queue), its
/// height (stack) or its signed position (deque). Two signed summaries are
/// kept: one over (value, time) pairs and one over (time, coordinate) pairs,
/// +1 at the insert and -1 at the extract that names it. Both must cancel.
/// The second summary pins each named insert to the coordinate the extract
/// actually removes, which forces the true matching.
template <CellAccumulator Acc>
class BasicTsChecker {
 public:
  BasicTsChecker(Discipline discipline, std::uint64_t length, Value universe, const Acc& prototype)
      : discipline_(discipline),
        length_(std::max<std::uint64_t>(length, 1)),
        universe_(universe),
        coordinates_(discipline == Discipline::Deque ? 2 * length_ + 1 : length_),
        pairs_(prototype.resized(length_ * universe - 1)),
        coords_(prototype.resized(length_ * coordinates_ - 1)) {
    if (universe == 0) throw ParamError("universe must be positive");
  }

  void push(const Operation& op) {
    const std::uint64_t j = latch_.advance();
    check_kind(op);
    detail::require_value(op.value, universe_);
    if (j > length_) throw FormatError("more operations than the declared length");
    if (latch_.rejected()) return;

    if (op.is_insert()) {
      const std::uint64_t c = insert_coordinate(op.kind);
      pairs_.add(pair_index(op.value, j), 1);
      coords_.add(coord_index(j, c), 1);
      return;
    }
    if (size() == 0) return latch_.reject("extract from an empty structure");
    const std::uint64_t t = op.timestamp;
    if (t == 0 || t >= j) return latch_.reject("timestamp does not name an earlier position");
    if (discipline_ == Discipline::Queue) {
      if (t <= last_timestamp_) return latch_.reject("queue timestamps not increasing");
      last_timestamp_ = t;
    }
    const std::uint64_t c = extract_coordinate(op.kind);
    pairs_.add(pair_index(op.value, t), -1);
    coords_.add(coord_index(t, c), -1);
  }

  Verdict finish() const {
    if (latch_.rejected()) return *latch_.rejection();
    if (size() != 0) return Verdict::reject("structure not empty at end");
    if (!pairs_.is_zero() || !coords_.is_zero()) {
      return Verdict::reject("timestamps do not name the matching inserts");
    }
    return Verdict::accept();
  }

  bool rejected() const { return latch_.rejected(); }

  /// Accumulators plus scalars; independent of the stream length.
  static constexpr std::size_t state_cells() { return 2 + 6; }
  double error_bound() const { return std::max(pairs_.error_bound(), coords_.error_bound()); }

 private:
  void check_kind(const Operation& op) const {
    const bool ok = discipline_ == Discipline::Deque
                        ? (op.kind == OpKind::InsHead || op.kind == OpKind::InsTail ||
                           ((op.kind == OpKind::ExtHead || op.kind == OpKind::ExtTail) && op.has_timestamp()))
                        : (op.kind == OpKind::Ins || op.kind == OpKind::ExtTs);
    if (!ok) throw KindError("operation kind does not belong to this timestamped transcript");
  }

  std::uint64_t size() const { return static_cast<std::uint64_t>(high_ - low_); }

  // Coordinates are shifted by length_ for deques so they are non-negative.
  std::uint64_t insert_coordinate(OpKind kind) {
    switch (discipline_) {
      case Discipline::Queue: return static_cast<std::uint64_t>(high_++);
      case Discipline::Stack: return static_cast<std::uint64_t>(high_++);
      case Discipline::Deque:
        if (kind == OpKind::InsHead) return static_cast<std::uint64_t>(--low_ + shift());
        return static_cast<std::uint64_t>(high_++ + shift());
    }
    return 0;
  }

  std::uint64_t extract_coordinate(OpKind kind) {
    switch (discipline_) {
      case Discipline::Queue: return static_cast<std::uint64_t>(low_++);
      case Discipline::Stack: return static_cast<std::uint64_t>(--high_);
      case Discipline::Deque:
        if (kind == OpKind::ExtHead) return static_cast<std::uint64_t>(low_++ + shift());
        return static_cast<std::uint64_t>(--high_ + shift());
    }
    return 0;
  }

  std::int64_t shift() const { return static_cast<std::int64_t>(length_); }
  std::uint64_t pair_index(Value u, std::uint64_t t) const { return (t - 1) * universe_ + (u - 1); }
  std::uint64_t coord_index(std::uint64_t t, std::uint64_t c) const { return (t - 1) * coordinates_ + c; }

  Discipline discipline_;
  std::uint64_t length_;
  Value universe_;
  std::uint64_t coordinates_;
  Acc pairs_, coords_;
  // Live items occupy [low_, high_): queue ordinals, stack heights, deque positions.
  std::int64_t low_ = 0, high_ = 0;
  std::uint64_t last_timestamp_ = 0;
  detail::RejectLatch latch_;
};

using QueueChecker = BasicQueueChecker<Fingerprint>;
using StackChecker = BasicStackChecker<Fingerprint>;
using DyckChecker = BasicDyckChecker<Fingerprint>;
using DequeChecker = BasicDequeChecker<Fingerprint>;
using TsChecker = BasicTsChecker<Fingerprint>;

}  // namespace pmc
