#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pmc {

struct Verdict {
  bool accepted = true;
  std::string reason;
  /// 1-based stream position of the operation that triggered the rejection.
  std::optional<std::uint64_t> position;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string reason, std::optional<std::uint64_t> position = std::nullopt) {
    return {false, std::move(reason), position};
  }
};

/// Result of running a streaming checker over a transcript.
struct CheckOutcome {
  Verdict verdict;
  std::size_t peak_state_cells = 0;
  /// Per-comparison false-equality bound of the accumulators used (0 in exact mode).
  double fp_error_bound = 0.0;
};

}  // namespace pmc
