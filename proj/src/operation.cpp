#include "pmc/operation.hpp"

#include <charconv>

#include "pmc/errors.hpp"

namespace pmc {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_positive(std::string_view token, std::string_view what, std::uint64_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError("malformed " + std::string(what) + " '" + std::string(token) + "'", line_no);
  }
  if (v == 0) throw FormatError(std::string(what) + " must be positive", line_no);
  if (v > kMaxValue) throw FormatError(std::string(what) + " does not fit in 63 bits", line_no);
  return v;
}

bool paren_char(char c, Operation& out) {
  switch (c) {
    case '(': out = Operation::open(Paren::A); return true;
    case ')': out = Operation::close(Paren::A); return true;
    case '[': out = Operation::open(Paren::B); return true;
    case ']': out = Operation::close(Paren::B); return true;
    default: return false;
  }
}

}  // namespace

Operation parse_line(std::string_view line, std::uint64_t line_no) {
  const auto tokens = split_tokens(line);
  if (tokens.empty()) throw FormatError("empty operation line", line_no);

  if (tokens.size() == 1 && tokens[0].size() == 1) {
    Operation op;
    if (paren_char(tokens[0][0], op)) return op;
  }

  const std::string_view tag = tokens[0];
  OpKind kind;
  bool extract = false;
  if (tag == "I") {
    kind = OpKind::Ins;
  } else if (tag == "E") {
    kind = OpKind::Ext;
    extract = true;
  } else if (tag == "IH") {
    kind = OpKind::InsHead;
  } else if (tag == "IT") {
    kind = OpKind::InsTail;
  } else if (tag == "EH") {
    kind = OpKind::ExtHead;
    extract = true;
  } else if (tag == "ET") {
    kind = OpKind::ExtTail;
    extract = true;
  } else {
    throw FormatError("unknown operation '" + std::string(tag) + "'", line_no);
  }

  if (tokens.size() < 2) throw FormatError("missing value", line_no);
  if (tokens.size() > 3) throw FormatError("too many tokens", line_no);
  Operation op{kind, parse_positive(tokens[1], "value", line_no), Paren::A, 0};
  if (tokens.size() == 3) {
    if (!extract) throw FormatError("timestamp on a non-extract", line_no);
    op.timestamp = parse_positive(tokens[2], "timestamp", line_no);
    if (kind == OpKind::Ext) op.kind = OpKind::ExtTs;
  }
  return op;
}

Transcript parse_paren_line(std::string_view line, std::uint64_t line_no) {
  Transcript out;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    Operation op;
    if (!paren_char(c, op)) {
      throw FormatError(std::string("unexpected character '") + c + "' in parenthesis line", line_no);
    }
    out.push_back(op);
  }
  return out;
}

std::string serialize(const Operation& op) {
  auto with_value = [&](const char* tag) {
    std::string s = std::string(tag) + " " + std::to_string(op.value);
    if (op.has_timestamp()) s += " " + std::to_string(op.timestamp);
    return s;
  };
  switch (op.kind) {
    case OpKind::Ins: return with_value("I");
    case OpKind::Ext:
    case OpKind::ExtTs: return with_value("E");
    case OpKind::InsHead: return with_value("IH");
    case OpKind::InsTail: return with_value("IT");
    case OpKind::ExtHead: return with_value("EH");
    case OpKind::ExtTail: return with_value("ET");
    case OpKind::Open: return op.paren == Paren::A ? "(" : "[";
    case OpKind::Close: return op.paren == Paren::A ? ")" : "]";
  }
  return {};
}

std::int64_t cnt(std::span<const Operation> prefix, Value u) {
  std::int64_t c = 0;
  for (const auto& op : prefix) {
    if (op.value != u) continue;
    if (op.kind == OpKind::Ins) ++c;
    if (op.kind == OpKind::Ext) --c;
  }
  return c;
}

Transcript parens_from_string(std::string_view text) { return parse_paren_line(text); }

std::string to_paren_string(std::span<const Operation> parens) {
  std::string s;
  s.reserve(parens.size());
  for (const auto& op : parens) s += serialize(op);
  return s;
}

}  // namespace pmc
