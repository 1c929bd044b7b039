#include "pmc/check.hpp"

#include <cmath>

#include "pmc/checkers.hpp"
#include "pmc/pqcheck.hpp"

namespace pmc {
namespace {

template <typename Checker>
CheckOutcome drain(OperationSource& source, Checker& checker, std::uint64_t length) {
  std::uint64_t count = 0;
  while (auto op = source.next()) {
    if (++count > length) {
      throw FormatError("stream longer than the declared length " + std::to_string(length));
    }
    checker.push(*op);
  }
  if (count != length) {
    throw FormatError("stream ended after " + std::to_string(count) + " operations, declared length " +
                      std::to_string(length));
  }
  CheckOutcome outcome;
  outcome.verdict = checker.finish();
  if constexpr (requires { checker.peak_state_cells(); }) {
    outcome.peak_state_cells = checker.peak_state_cells();
  } else {
    outcome.peak_state_cells = checker.state_cells();
  }
  outcome.fp_error_bound = checker.error_bound();
  return outcome;
}

template <CellAccumulator Acc>
CheckOutcome run_with(Language lang, OperationSource& source, const CheckConfig& config, const Acc& proto) {
  const std::uint64_t n = config.length;
  const std::uint64_t block = config.block_length == 0 ? default_block_length(n) : config.block_length;
  const Value universe = config.universe;
  switch (lang) {
    case Language::Pq: return pq_pipeline(source, PqPipelineConfig{n, universe, block}, proto);
    case Language::Stack: {
      BasicStackChecker<Acc> checker(n, universe, block, proto);
      return drain(source, checker, n);
    }
    case Language::Queue: {
      BasicQueueChecker<Acc> checker(n, proto);
      return drain(source, checker, n);
    }
    case Language::Deque: {
      BasicDequeChecker<Acc> checker(n, universe, block, proto);
      return drain(source, checker, n);
    }
    case Language::Dyck2: {
      BasicDyckChecker<Acc> checker(n, block, proto);
      return drain(source, checker, n);
    }
    case Language::QueueTs:
    case Language::StackTs:
    case Language::DequeTs: {
      const Discipline d = lang == Language::QueueTs   ? Discipline::Queue
                           : lang == Language::StackTs ? Discipline::Stack
                                                       : Discipline::Deque;
      BasicTsChecker<Acc> checker(d, n, universe, proto);
      return drain(source, checker, n);
    }
  }
  throw ParamError("unknown language");
}

}  // namespace

std::uint64_t default_block_length(std::uint64_t length) {
  auto l = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(length)));
  while (l * l < length) ++l;
  while (l > 1 && (l - 1) * (l - 1) >= length) --l;
  return l == 0 ? 1 : l;
}

CheckOutcome run_check(Language lang, OperationSource& source, const CheckConfig& config) {
  if (config.universe == 0) throw ParamError("universe must be positive");
  if (config.mode == CheckMode::Exact) return run_with(lang, source, config, ExactCells{});
  return run_with(lang, source, config, Fingerprint(FingerprintParams::from_seed(config.seed, 0)));
}

}  // namespace pmc
