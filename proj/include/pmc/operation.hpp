#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pmc {

using Value = std::uint64_t;

/// Largest value the text format accepts (values must fit in 63 bits).
inline constexpr Value kMaxValue = (Value{1} << 63) - 1;

enum class OpKind : std::uint8_t {
  Ins,
  Ext,
  InsHead,
  InsTail,
  ExtHead,
  ExtTail,
  ExtTs,
  Open,
  Close,
};

/// Parenthesis type: `A` is `(`/`)`, `B` is `[`/`]`.
enum class Paren : std::uint8_t { A, B };

/// One transcript symbol.
///
/// `value` is 0 only for Open/Close. `timestamp` is 0 when absent; it is
/// carried by ExtTs and, in deque transcripts, by ExtHead/ExtTail.
struct Operation {
  OpKind kind = OpKind::Ins;
  Value value = 0;
  Paren paren = Paren::A;
  std::uint64_t timestamp = 0;

  static constexpr Operation ins(Value u) { return {OpKind::Ins, u, Paren::A, 0}; }
  static constexpr Operation ext(Value u) { return {OpKind::Ext, u, Paren::A, 0}; }
  static constexpr Operation ins_head(Value u) { return {OpKind::InsHead, u, Paren::A, 0}; }
  static constexpr Operation ins_tail(Value u) { return {OpKind::InsTail, u, Paren::A, 0}; }
  static constexpr Operation ext_head(Value u, std::uint64_t t = 0) {
    return {OpKind::ExtHead, u, Paren::A, t};
  }
  static constexpr Operation ext_tail(Value u, std::uint64_t t = 0) {
    return {OpKind::ExtTail, u, Paren::A, t};
  }
  static constexpr Operation ext_ts(Value u, std::uint64_t t) { return {OpKind::ExtTs, u, Paren::A, t}; }
  static constexpr Operation open(Paren p) { return {OpKind::Open, 0, p, 0}; }
  static constexpr Operation close(Paren p) { return {OpKind::Close, 0, p, 0}; }

  constexpr bool is_paren() const { return kind == OpKind::Open || kind == OpKind::Close; }
  constexpr bool is_insert() const {
    return kind == OpKind::Ins || kind == OpKind::InsHead || kind == OpKind::InsTail;
  }
  constexpr bool is_extract() const {
    return kind == OpKind::Ext || kind == OpKind::ExtHead || kind == OpKind::ExtTail ||
           kind == OpKind::ExtTs;
  }
  constexpr bool has_timestamp() const { return timestamp != 0; }

  friend bool operator==(const Operation&, const Operation&) = default;
};

using Transcript = std::vector<Operation>;

/// Parses one operation line (`I 5`, `E 7 3`, `IH 2`, `(`, ...). `line_no`
/// is only used in error messages. Throws FormatError.
Operation parse_line(std::string_view line, std::uint64_t line_no = 0);

/// Parses a line made only of parenthesis characters, e.g. `(([]))`.
Transcript parse_paren_line(std::string_view line, std::uint64_t line_no = 0);

/// Inverse of parse_line.
std::string serialize(const Operation& op);

/// Number of inserts of `u` minus number of extracts of `u`.
std::int64_t cnt(std::span<const Operation> prefix, Value u);

/// Parses a parenthesis string written with `( ) [ ]` (whitespace ignored).
Transcript parens_from_string(std::string_view text);

std::string to_paren_string(std::span<const Operation> parens);

}  // namespace pmc
