#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmc/errors.hpp"
#include "pmc/fingerprint.hpp"
#include "pmc/operation.hpp"
#include "pmc/stream.hpp"
#include "pmc/subcheck.hpp"
#include "pmc/verdict.hpp"

namespace pmc {

/// The per-epoch maxima f[1..r] and the current epoch index.
///
/// f is a non-increasing step function of k, stored as runs of equal value.
/// Epoch indices are 1-based; epoch 0 means no epoch has begun.
class EpochState {
 public:
  explicit EpochState(std::uint32_t epochs);

  std::uint32_t epochs() const { return epochs_; }
  std::uint32_t current() const { return current_; }

  /// Advances to the next epoch. Throws CapacityError past the last one.
  void begin_epoch();

  /// Least k with f[k] <= u.
  std::uint32_t assign(Value u) const;

  Value f(std::uint32_t k) const;

  struct Range {
    std::uint32_t first;
    std::uint32_t last;  // inclusive
  };

  /// f[k] <- max(u, f[k]) for every k before the current epoch. Returns the
  /// positions whose value strictly increased (always a contiguous range).
  std::optional<Range> raise(Value u);

  std::size_t run_count() const { return runs_.size(); }

 private:
  struct Run {
    std::uint32_t first;
    Value value;
  };
  std::vector<Run> runs_;  // values strictly decreasing, last run is 0
  std::uint32_t epochs_;
  std::uint32_t current_ = 0;
};

/// Epoch count for a transcript of `length` cut into blocks of `block_length`.
constexpr std::uint64_t pq_epoch_count(std::uint64_t length, std::uint64_t block_length) {
  return 2 * ((length + block_length - 1) / block_length);
}

/// Largest cell index of the (epoch, value) map for `epochs` x `universe`.
constexpr std::uint64_t pq_max_index(std::uint64_t epochs, Value universe) {
  return epochs * universe == 0 ? 0 : epochs * universe - 1;
}

/// Streaming priority-queue checker over input already split into epochs
/// (a run of ascending extracts followed by a run of inserts).
///
/// The X array is accumulated directly; Y and Z keep one explicit cell per
/// epoch k, at value f[k], and fold it into their accumulators once f[k]
/// moves past it. With `ExactCells` the arrays are held exactly.
template <CellAccumulator Acc>
class BasicPqChecker {
 public:
  BasicPqChecker(std::uint32_t epochs, Value universe, const Acc& prototype)
      : epochs_(epochs),
        universe_(universe),
        x_(prototype.resized(pq_max_index(epochs, universe))),
        y_(x_),
        z_(x_) {
    if (universe == 0) throw ParamError("universe must be positive");
  }

  void begin_epoch() {
    epochs_.begin_epoch();
    last_extract_ = 0;
    saw_insert_ = false;
  }

  /// Feeds one operation. `epoch_boundary` starts a new epoch first.
  void step(const Operation& op, bool epoch_boundary, std::uint64_t position = 0) {
    if (epoch_boundary) begin_epoch();
    if (op.kind == OpKind::Ext) {
      extract(op.value, position);
    } else if (op.kind == OpKind::Ins) {
      insert(op.value, position);
    } else {
      throw KindError("priority-queue transcripts use plain inserts and extracts");
    }
  }

  void extract(Value u, std::uint64_t position = 0) {
    check_value(u);
    ++steps_;
    if (rejection_) return;
    if (saw_insert_) throw ParamError("extract after an insert within one epoch");
    if (epochs_.current() <= 1) {
      rejection_ = Verdict::reject("extract before any insert", position);
      return;
    }
    if (u < last_extract_) {
      rejection_ = Verdict::reject("extracts within an epoch are not ascending", position);
      return;
    }
    last_extract_ = u;
    last_was_insert_ = false;

    const std::uint32_t target = epochs_.assign(u);
    if (auto raised = epochs_.raise(u)) retire(raised->first, raised->last);
    LiveCell& cell = live_[target];
    cell.value = u;
    cell.y += 1;
    cell.z = std::max(cell.y, cell.z);
    peak_ = std::max(peak_, state_cells());
  }

  void insert(Value u, [[maybe_unused]] std::uint64_t position = 0) {
    check_value(u);
    ++steps_;
    if (rejection_) return;
    if (epochs_.current() == 0) throw ParamError("insert before the first epoch");
    saw_insert_ = true;
    last_was_insert_ = true;

    const std::uint32_t target = epochs_.assign(u);
    const Value ceiling = epochs_.f(target);
    if (ceiling < u) {
      x_.add(index(target, u), 1);
    } else {
      LiveCell& cell = live_[target];
      cell.value = u;
      cell.y -= 1;
    }
    peak_ = std::max(peak_, state_cells());
  }

  /// Folds the live cells and compares X with Y and Z.
  Verdict finalize() {
    if (rejection_) return *rejection_;
    if (last_was_insert_) return Verdict::reject("transcript ends with items still queued");
    retire(1, epochs_.epochs());
    if (!x_.matches(y_) || !x_.matches(z_)) {
      return Verdict::reject("epoch summaries disagree: some extract was not the minimum");
    }
    return Verdict::accept();
  }

  bool rejected() const { return rejection_.has_value(); }
  const EpochState& epoch_state() const { return epochs_; }
  std::size_t live_cells() const { return live_.size(); }
  std::size_t state_cells() const { return epochs_.run_count() + live_.size() + 3; }
  std::size_t peak_state_cells() const { return peak_; }
  double error_bound() const { return x_.error_bound(); }
  std::uint64_t steps() const { return steps_; }

  /// Full-array views, available in exact mode.
  std::int64_t x(std::uint32_t k, Value u) const
    requires std::same_as<Acc, ExactCells>
  {
    return x_.get(index(k, u));
  }
  std::int64_t y(std::uint32_t k, Value u) const
    requires std::same_as<Acc, ExactCells>
  {
    return y_.get(index(k, u)) + live_part(k, u, &LiveCell::y);
  }
  std::int64_t z(std::uint32_t k, Value u) const
    requires std::same_as<Acc, ExactCells>
  {
    return z_.get(index(k, u)) + live_part(k, u, &LiveCell::z);
  }

 private:
  struct LiveCell {
    Value value = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;
  };

  std::uint64_t index(std::uint32_t k, Value u) const {
    return static_cast<std::uint64_t>(k - 1) * universe_ + (u - 1);
  }

  void check_value(Value u) const {
    if (u == 0 || u > universe_) {
      throw FormatError("value " + std::to_string(u) + " outside the universe [1, " +
                        std::to_string(universe_) + "]");
    }
  }

  std::int64_t live_part(std::uint32_t k, Value u, std::int64_t LiveCell::*field) const {
    auto it = live_.find(k);
    return it != live_.end() && it->second.value == u ? it->second.*field : 0;
  }

  void retire(std::uint32_t first, std::uint32_t last) {
    auto it = live_.lower_bound(first);
    while (it != live_.end() && it->first <= last) {
      const auto idx = index(it->first, it->second.value);
      y_.add(idx, it->second.y);
      z_.add(idx, it->second.z);
      it = live_.erase(it);
    }
  }

  EpochState epochs_;
  Value universe_;
  Acc x_, y_, z_;
  std::map<std::uint32_t, LiveCell> live_;
  std::optional<Verdict> rejection_;
  Value last_extract_ = 0;
  bool saw_insert_ = false;
  bool last_was_insert_ = false;
  std::size_t peak_ = 0;
  std::uint64_t steps_ = 0;
};

using PqChecker = BasicPqChecker<Fingerprint>;
using ExactPqChecker = BasicPqChecker<ExactCells>;

/// Feeds a transcript already in epoch form (ascending extract runs
/// alternating with insert runs). An extract that follows an insert opens a
/// new epoch. `epochs` bounds the number of epochs.
template <CellAccumulator Acc>
Verdict pq_check_raw(std::span<const Operation> ops, std::uint32_t epochs, Value universe,
                     const Acc& prototype) {
  BasicPqChecker<Acc> checker(epochs, universe, prototype);
  if (epochs == 0) {
    return ops.empty() ? Verdict::accept() : Verdict::reject("nonempty transcript with zero epochs");
  }
  checker.begin_epoch();
  bool in_inserts = false;
  std::uint64_t position = 0;
  for (const auto& op : ops) {
    ++position;
    const bool boundary = op.kind == OpKind::Ext && in_inserts;
    checker.step(op, boundary, position);
    in_inserts = op.kind == OpKind::Ins;
  }
  return checker.finalize();
}

struct PqPipelineConfig {
  std::uint64_t length = 0;
  Value universe = 1;
  std::uint64_t block_length = 1;
};

/// Cuts the stream into blocks, canonicalizes each with SubChecker and runs
/// the epoch checker over the canonical forms. Every block yields two
/// epochs: (extracts, matched insert) and (matched extract, inserts).
template <CellAccumulator Acc>
CheckOutcome pq_pipeline(OperationSource& source, const PqPipelineConfig& config, const Acc& prototype) {
  if (config.block_length == 0) throw ParamError("block length must be positive");
  const std::uint64_t epochs = pq_epoch_count(config.length, config.block_length);
  if (epochs > UINT32_MAX) throw ParamError("too many epochs");
  BasicPqChecker<Acc> checker(static_cast<std::uint32_t>(epochs), config.universe, prototype);
  SubChecker block;
  CheckOutcome outcome;
  outcome.fp_error_bound = checker.error_bound();
  std::size_t peak = 0;
  std::uint64_t position = 0;
  std::uint64_t block_start = 1;
  std::optional<Verdict> rejection;

  auto flush = [&] {
    GammaBlock gamma = block.finish();
    checker.begin_epoch();
    for (Value v : gamma.extracts) checker.extract(v, block_start);
    if (gamma.matched_max) checker.insert(*gamma.matched_max, block_start);
    checker.begin_epoch();
    if (gamma.matched_max) checker.extract(*gamma.matched_max, block_start);
    for (Value u : gamma.inserts) checker.insert(u, block_start);
    block_start = position + 1;
  };

  while (auto op = source.next()) {
    ++position;
    if (position > config.length) {
      throw FormatError("stream longer than the declared length " + std::to_string(config.length));
    }
    if (rejection) continue;
    if (op->kind != OpKind::Ins && op->kind != OpKind::Ext) {
      throw KindError("priority-queue transcripts use plain inserts and extracts");
    }
    if (op->value == 0 || op->value > config.universe) {
      throw FormatError("value " + std::to_string(op->value) + " outside the universe [1, " +
                        std::to_string(config.universe) + "]");
    }
    if (auto bad = block.push(*op)) {
      rejection = Verdict::reject("block is not locally consistent", block_start + bad->position - 1);
      continue;
    }
    peak = std::max(peak, block.working_size() + checker.state_cells());
    if (block.consumed() == config.block_length) {
      flush();
      peak = std::max(peak, checker.peak_state_cells());
      if (checker.rejected()) rejection = checker.finalize();
    }
  }
  if (position != config.length) {
    throw FormatError("stream ended after " + std::to_string(position) +
                      " operations, declared length " + std::to_string(config.length));
  }
  if (!rejection && block.consumed() > 0) flush();
  outcome.verdict = rejection ? *rejection : checker.finalize();
  outcome.peak_state_cells = std::max(peak, checker.peak_state_cells());
  return outcome;
}

}  // namespace pmc
