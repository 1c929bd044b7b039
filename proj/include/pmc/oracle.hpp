#pragma once

#include <cstdint>
#include <span>

#include "pmc/language.hpp"
#include "pmc/operation.hpp"
#include "pmc/subcheck.hpp"
#include "pmc/verdict.hpp"

namespace pmc {

/// Exact membership by simulating the data structure in linear space.
///
/// Timestamped languages require each extract to name the position of the
/// insert it actually removes. Throws KindError on operations foreign to
/// `lang`.
Verdict oracle_check(std::span<const Operation> transcript, Language lang);

/// Sum of the 1-based positions of all extracts.
std::uint64_t phi(std::span<const Operation> ops);

struct RearrangeStats {
  std::size_t steps = 0;
  std::uint64_t initial_phi = 0;
  std::uint64_t final_phi = 0;
};

/// Canonical form of a locally consistent block by local rewriting:
/// adjacent ins(u) ext(v) with u > v are swapped, ins(u) ext(u) ext(v)
/// becomes ext(v) ins(u) ext(u), ins(v) ins(u) ext(u) becomes
/// ins(u) ext(u) ins(v); leftmost rewrite first, until none applies. Every
/// rewrite lowers phi by exactly one (checked; std::logic_error otherwise).
/// Matched pairs are then collapsed to the largest one.
GammaBlock rearrange_fixpoint(std::span<const Operation> block, RearrangeStats* stats = nullptr);

}  // namespace pmc
