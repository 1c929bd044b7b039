#pragma once

#include <cstdint>
#include <span>

#include "pmc/operation.hpp"

namespace pmc {

/// Opens minus closes.
std::int64_t height(std::span<const Operation> parens);

/// Streaming map from a two-type parenthesis string of known length N to a
/// priority-queue transcript over [1, 4N]. A string is balanced iff its image
/// is a valid priority-queue transcript.
///
/// Opens at height h become ins(2N - 2h) for `(` and ins(2N - 2h - 1) for
/// `[`; closes use the height after the close. The only state is the height.
class PsiTransform {
 public:
  explicit PsiTransform(std::uint64_t length);

  /// Throws KindError for non-parentheses and FormatError past the length.
  Operation push(const Operation& paren);

  /// Throws FormatError unless exactly `length` symbols were pushed.
  void finish() const;

  std::int64_t height() const { return height_; }
  std::uint64_t length() const { return length_; }
  Value universe() const { return 4 * length_; }

 private:
  std::uint64_t length_;
  std::uint64_t consumed_ = 0;
  std::int64_t height_ = 0;
};

Transcript psi(std::span<const Operation> parens, std::uint64_t length);

inline Transcript psi(std::span<const Operation> parens) { return psi(parens, parens.size()); }

}  // namespace pmc
