#pragma once

#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <span>

#include "pmc/operation.hpp"

namespace pmc {

/// A forward-only producer of operations. Each operation is delivered once.
class OperationSource {
 public:
  virtual ~OperationSource() = default;

  /// Next operation, or nullopt at end of stream.
  virtual std::optional<Operation> next() = 0;

  virtual std::optional<std::uint64_t> declared_length() const { return std::nullopt; }
  virtual std::optional<Value> universe() const { return std::nullopt; }
};

/// Streams an in-memory transcript.
class SpanSource final : public OperationSource {
 public:
  explicit SpanSource(std::span<const Operation> ops, std::optional<Value> universe = std::nullopt)
      : ops_(ops), universe_(universe) {}

  std::optional<Operation> next() override {
    if (pos_ == ops_.size()) return std::nullopt;
    return ops_[pos_++];
  }
  std::optional<std::uint64_t> declared_length() const override { return ops_.size(); }
  std::optional<Value> universe() const override { return universe_; }

 private:
  std::span<const Operation> ops_;
  std::optional<Value> universe_;
  std::size_t pos_ = 0;
};

/// Sizes declared by an optional `# N=<len> U=<max>` first line.
struct TranscriptHeader {
  std::optional<std::uint64_t> length;
  std::optional<Value> universe;
};

/// Parses a header line; nullopt if the line is not a header.
std::optional<TranscriptHeader> parse_header(std::string_view line);

std::string format_header(std::uint64_t length, Value universe);

/// Reads the text transcript format from a stream, one line at a time.
///
/// The header (if any) is read on construction. When the header declares a
/// length or universe, the source enforces it and throws FormatError on the
/// first operation that breaks it.
class TextSource final : public OperationSource {
 public:
  explicit TextSource(std::istream& in);

  std::optional<Operation> next() override;
  std::optional<std::uint64_t> declared_length() const override { return header_.length; }
  std::optional<Value> universe() const override { return header_.universe; }

  /// Overrides sizes that the header left open.
  void set_defaults(std::optional<std::uint64_t> length, std::optional<Value> universe);

  const TranscriptHeader& header() const { return header_; }
  std::uint64_t produced() const { return produced_; }

 private:
  bool fill();
  Operation checked(Operation op);

  std::istream& in_;
  TranscriptHeader header_;
  std::deque<Operation> pending_;
  std::uint64_t line_no_ = 0;
  std::uint64_t produced_ = 0;
  bool at_end_ = false;
};

/// Counts, maxima and header of a whole transcript (the CLI's pre-scan).
struct TranscriptStats {
  TranscriptHeader header;
  std::uint64_t length = 0;
  Value max_value = 0;
};

TranscriptStats scan_transcript(std::istream& in);

/// Reads a full transcript into memory.
Transcript read_transcript(std::istream& in, TranscriptHeader* header = nullptr);

}  // namespace pmc
