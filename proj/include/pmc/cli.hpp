#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmc/check.hpp"
#include "pmc/language.hpp"
#include "pmc/verdict.hpp"

namespace pmc {

/// What `check` prints, with --json as an object keyed by these field names.
struct CheckReport {
  Verdict verdict;
  std::uint64_t n = 0;
  Language language = Language::Pq;
  CheckMode mode = CheckMode::Fingerprint;
  std::size_t peak_state_cells = 0;
  std::uint64_t block_length = 0;
  double fp_error_bound = 0.0;
  std::uint64_t seed = 1;
};

std::string to_json(const CheckReport& report);
std::string to_text(const CheckReport& report);

inline constexpr int kExitAccept = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleDisagreement = 3;

/// Entry point of the `pmc` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pmc
