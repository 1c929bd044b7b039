#include "pmc/stream.hpp"

#include <charconv>
#include <string>

#include "pmc/errors.hpp"

namespace pmc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_paren_char(char c) { return c == '(' || c == ')' || c == '[' || c == ']'; }

// Appends the operations on one non-comment line.
void parse_body_line(std::string_view line, std::uint64_t line_no, std::deque<Operation>& out) {
  if (is_paren_char(line.front())) {
    for (const auto& op : parse_paren_line(line, line_no)) out.push_back(op);
  } else {
    out.push_back(parse_line(line, line_no));
  }
}

}  // namespace

std::optional<TranscriptHeader> parse_header(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() != '#') return std::nullopt;
  line.remove_prefix(1);
  TranscriptHeader h;
  bool any = false;
  while (!(line = trim(line)).empty()) {
    const auto end = line.find_first_of(" \t");
    const std::string_view tok = line.substr(0, end);
    line = end == std::string_view::npos ? std::string_view{} : line.substr(end);
    if (tok.size() < 3 || tok[1] != '=' || (tok[0] != 'N' && tok[0] != 'U')) return std::nullopt;
    std::uint64_t v = 0;
    const auto digits = tok.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    (tok[0] == 'N' ? h.length : h.universe) = v;
    any = true;
  }
  if (!any) return std::nullopt;
  return h;
}

std::string format_header(std::uint64_t length, Value universe) {
  return "# N=" + std::to_string(length) + " U=" + std::to_string(universe);
}

TextSource::TextSource(std::istream& in) : in_(in) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (line_no_ == 1) {
        if (auto h = parse_header(body)) header_ = *h;
      }
      continue;
    }
    parse_body_line(body, line_no_, pending_);
    break;
  }
  if (header_.universe && *header_.universe == 0) throw FormatError("header declares U=0", 1);
}

void TextSource::set_defaults(std::optional<std::uint64_t> length, std::optional<Value> universe) {
  if (!header_.length) header_.length = length;
  if (!header_.universe) header_.universe = universe;
}

bool TextSource::fill() {
  std::string line;
  while (pending_.empty() && std::getline(in_, line)) {
    ++line_no_;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    parse_body_line(body, line_no_, pending_);
  }
  return !pending_.empty();
}

Operation TextSource::checked(Operation op) {
  ++produced_;
  if (header_.length && produced_ > *header_.length) {
    throw FormatError("more operations than the declared N=" + std::to_string(*header_.length),
                      line_no_);
  }
  if (header_.universe && !op.is_paren() && op.value > *header_.universe) {
    throw FormatError("value " + std::to_string(op.value) + " exceeds the declared U=" +
                          std::to_string(*header_.universe),
                      line_no_);
  }
  return op;
}

std::optional<Operation> TextSource::next() {
  if (at_end_) return std::nullopt;
  if (pending_.empty() && !fill()) {
    at_end_ = true;
    if (header_.length && produced_ != *header_.length) {
      throw FormatError("stream ended after " + std::to_string(produced_) +
                        " operations, header declared N=" + std::to_string(*header_.length));
    }
    return std::nullopt;
  }
  Operation op = pending_.front();
  pending_.pop_front();
  return checked(op);
}

TranscriptStats scan_transcript(std::istream& in) {
  TextSource src(in);
  TranscriptStats stats;
  stats.header = src.header();
  while (auto op = src.next()) {
    ++stats.length;
    if (op->value > stats.max_value) stats.max_value = op->value;
  }
  return stats;
}

Transcript read_transcript(std::istream& in, TranscriptHeader* header) {
  TextSource src(in);
  if (header) *header = src.header();
  Transcript ops;
  while (auto op = src.next()) ops.push_back(*op);
  return ops;
}

}  // namespace pmc
