#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pmc {

/// Malformed transcript text, or a stream that disagrees with its declared size.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what, std::uint64_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

/// An operation kind that the consuming component does not accept.
class KindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Infeasible or inconsistent parameters.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cell index outside the bound an accumulator was sized for.
class IndexBoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A checker was fed more epochs than it was sized for.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace pmc
