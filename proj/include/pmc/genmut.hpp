#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pmc/language.hpp"
#include "pmc/operation.hpp"

namespace pmc {

/// Random valid transcript of `length` operations over values [1, universe].
///
/// The structure size follows a random walk that is forced back to empty by
/// the end. Deterministic per seed; every result is re-checked with
/// oracle_check. Throws ParamError for odd lengths or a zero universe.
Transcript gen_valid(Language lang, std::uint64_t length, Value universe, std::uint64_t seed);

enum class MutationKind { ValueChange, SwapAdjacent, DropOp, DuplicateOp, ReorderExtract, TimestampShift };

inline constexpr MutationKind kAllMutations[] = {
    MutationKind::ValueChange, MutationKind::SwapAdjacent,   MutationKind::DropOp,
    MutationKind::DuplicateOp, MutationKind::ReorderExtract, MutationKind::TimestampShift,
};

std::string_view name(MutationKind kind);
std::optional<MutationKind> parse_mutation(std::string_view text);

/// A transcript that differs from `transcript` by one edit of `kind`.
/// Not necessarily invalid; callers filter with oracle_check. Throws
/// ParamError for an empty transcript or when `kind` has nothing to act on.
Transcript mutate(const Transcript& transcript, MutationKind kind, std::uint64_t seed);

}  // namespace pmc
