#pragma once

#include <cstdint>

#include "pmc/fingerprint.hpp"
#include "pmc/language.hpp"
#include "pmc/stream.hpp"
#include "pmc/verdict.hpp"

namespace pmc {

enum class CheckMode { Exact, Fingerprint };

struct CheckConfig {
  CheckMode mode = CheckMode::Fingerprint;
  /// Declared transcript length; sizes the index maps.
  std::uint64_t length = 0;
  /// Largest value; ignored for dyck2.
  Value universe = 1;
  /// Block length for pq/stack/deque/dyck2; 0 means ceil(sqrt(length)).
  std::uint64_t block_length = 0;
  std::uint64_t seed = 1;
};

std::uint64_t default_block_length(std::uint64_t length);

/// Streams `source` through the one-pass checker for `lang`.
CheckOutcome run_check(Language lang, OperationSource& source, const CheckConfig& config);

}  // namespace pmc
