#include "pmc/genmut.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmc/errors.hpp"
#include "pmc/oracle.hpp"

namespace pmc {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct Item {
  Value value;
  std::uint64_t position;
};

}  // namespace

Transcript gen_valid(Language lang, std::uint64_t length, Value universe, std::uint64_t seed) {
  if (length % 2 != 0) throw ParamError("valid transcripts have even length");
  if (universe == 0) throw ParamError("universe must be positive");
  Rng rng(seed);
  Transcript out;
  out.reserve(length);

  std::multiset<Value> heap;
  std::deque<Item> items;  // front = head
  std::vector<Paren> parens;

  for (std::uint64_t j = 1; j <= length; ++j) {
    const std::uint64_t size = lang == Language::Pq ? heap.size()
                               : lang == Language::Dyck2 ? parens.size()
                                                         : items.size();
    const std::uint64_t remaining = length - j + 1;
    const bool insert = size == 0 || (size < remaining && rng.coin());
    const bool head = rng.coin();

    if (insert) {
      const Value u = rng.uniform(1, universe);
      switch (lang) {
        case Language::Pq: heap.insert(u); out.push_back(Operation::ins(u)); break;
        case Language::Dyck2: {
          const Paren p = head ? Paren::A : Paren::B;
          parens.push_back(p);
          out.push_back(Operation::open(p));
          break;
        }
        case Language::Deque:
        case Language::DequeTs:
          head ? items.push_front({u, j}) : items.push_back({u, j});
          out.push_back(head ? Operation::ins_head(u) : Operation::ins_tail(u));
          break;
        default: items.push_back({u, j}); out.push_back(Operation::ins(u)); break;
      }
      continue;
    }

    switch (lang) {
      case Language::Pq: {
        const Value u = *heap.begin();
        heap.erase(heap.begin());
        out.push_back(Operation::ext(u));
        break;
      }
      case Language::Dyck2:
        out.push_back(Operation::close(parens.back()));
        parens.pop_back();
        break;
      case Language::Stack:
      case Language::StackTs: {
        const Item it = items.back();
        items.pop_back();
        out.push_back(lang == Language::Stack ? Operation::ext(it.value) : Operation::ext_ts(it.value, it.position));
        break;
      }
      case Language::Queue:
      case Language::QueueTs: {
        const Item it = items.front();
        items.pop_front();
        out.push_back(lang == Language::Queue ? Operation::ext(it.value) : Operation::ext_ts(it.value, it.position));
        break;
      }
      case Language::Deque:
      case Language::DequeTs: {
        const Item it = head ? items.front() : items.back();
        head ? items.pop_front() : items.pop_back();
        const std::uint64_t t = lang == Language::DequeTs ? it.position : 0;
        out.push_back(head ? Operation::ext_head(it.value, t) : Operation::ext_tail(it.value, t));
        break;
      }
    }
  }

  if (!oracle_check(out, lang).accepted) throw std::logic_error("generated transcript failed validation");
  return out;
}

std::string_view name(MutationKind kind) {
  switch (kind) {
    case MutationKind::ValueChange: return "value_change";
    case MutationKind::SwapAdjacent: return "swap_adjacent";
    case MutationKind::DropOp: return "drop_op";
    case MutationKind::DuplicateOp: return "duplicate_op";
    case MutationKind::ReorderExtract: return "reorder_extract";
    case MutationKind::TimestampShift: return "timestamp_shift";
  }
  return "?";
}

std::optional<MutationKind> parse_mutation(std::string_view text) {
  for (MutationKind kind : kAllMutations) {
    if (name(kind) == text) return kind;
  }
  return std::nullopt;
}

Transcript mutate(const Transcript& transcript, MutationKind kind, std::uint64_t seed) {
  if (transcript.empty()) throw ParamError("cannot mutate an empty transcript");
  Rng rng(seed);
  Transcript out = transcript;
  const std::size_t n = out.size();
  auto pick = [&](const std::vector<std::size_t>& candidates) {
    if (candidates.empty()) {
      throw ParamError("mutation " + std::string(name(kind)) + " does not apply to this transcript");
    }
    return candidates[rng.uniform(0, candidates.size() - 1)];
  };

  switch (kind) {
    case MutationKind::ValueChange: {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      Operation& op = out[pick(all)];
      if (op.is_paren()) {
        op.paren = op.paren == Paren::A ? Paren::B : Paren::A;
      } else if (op.value > 1 && rng.coin()) {
        --op.value;
      } else if (op.value < kMaxValue) {
        ++op.value;
      } else {
        --op.value;
      }
      break;
    }
    case MutationKind::SwapAdjacent: {
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(out[i] == out[i + 1])) candidates.push_back(i);
      }
      const std::size_t i = pick(candidates);
      std::swap(out[i], out[i + 1]);
      break;
    }
    case MutationKind::DropOp: {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(rng.uniform(0, n - 1)));
      break;
    }
    case MutationKind::DuplicateOp: {
      const std::size_t i = rng.uniform(0, n - 1);
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), out[i]);
      break;
    }
    case MutationKind::ReorderExtract: {
      std::vector<std::size_t> extracts;
      for (std::size_t i = 0; i < n; ++i) {
        if (out[i].is_extract()) extracts.push_back(i);
      }
      std::vector<std::size_t> firsts;
      for (std::size_t a = 0; a < extracts.size(); ++a) {
        for (std::size_t b = a + 1; b < extracts.size(); ++b) {
          if (out[extracts[a]].value != out[extracts[b]].value) {
            firsts.push_back(a);
            break;
          }
        }
      }
      const std::size_t a = pick(firsts);
      std::vector<std::size_t> partners;
      for (std::size_t b = a + 1; b < extracts.size(); ++b) {
        if (out[extracts[a]].value != out[extracts[b]].value) partners.push_back(b);
      }
      const std::size_t b = pick(partners);
      std::swap(out[extracts[a]].value, out[extracts[b]].value);
      break;
    }
    case MutationKind::TimestampShift: {
      std::vector<std::size_t> stamped;
      for (std::size_t i = 0; i < n; ++i) {
        if (out[i].has_timestamp()) stamped.push_back(i);
      }
      if (n < 2) stamped.clear();
      Operation& op = out[pick(stamped)];
      if (op.timestamp == n) {
        --op.timestamp;
      } else if (op.timestamp > 1 && rng.coin()) {
        --op.timestamp;
      } else {
        ++op.timestamp;
      }
      break;
    }
  }
  return out;
}

}  // namespace pmc
