#include "pmc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmc/errors.hpp"

namespace pmc {
namespace {

void require(bool ok, Language lang) {
  if (!ok) throw KindError("operation kind does not belong to language " + std::string(name(lang)));
}

Verdict check_pq(std::span<const Operation> ops) {
  std::multiset<Value> items;
  std::uint64_t j = 0;
  for (const auto& op : ops) {
    ++j;
    require(op.kind == OpKind::Ins || op.kind == OpKind::Ext, Language::Pq);
    if (op.kind == OpKind::Ins) {
      items.insert(op.value);
      continue;
    }
    if (items.empty()) return Verdict::reject("extract from an empty priority queue", j);
    if (*items.begin() != op.value) return Verdict::reject("extracted value is not the minimum", j);
    items.erase(items.begin());
  }
  if (!items.empty()) return Verdict::reject("priority queue not empty at end");
  return Verdict::accept();
}

// Stack, queue and deque share one simulation over a std::deque whose front
// is the head. Plain inserts go to the tail; plain extracts come from the
// tail for a stack and from the head for a queue.
Verdict check_sequence(std::span<const Operation> ops, Language lang) {
  std::deque<std::pair<Value, std::uint64_t>> items;
  const bool timestamped = is_timestamped(lang);
  std::uint64_t j = 0;
  for (const auto& op : ops) {
    ++j;
    bool insert = false;
    bool at_head = false;
    switch (lang) {
      case Language::Stack:
      case Language::Queue:
        require(op.kind == OpKind::Ins || op.kind == OpKind::Ext, lang);
        insert = op.kind == OpKind::Ins;
        at_head = lang == Language::Queue && !insert;
        break;
      case Language::StackTs:
      case Language::QueueTs:
        require(op.kind == OpKind::Ins || op.kind == OpKind::ExtTs, lang);
        insert = op.kind == OpKind::Ins;
        at_head = lang == Language::QueueTs && !insert;
        break;
      case Language::Deque:
      case Language::DequeTs: {
        const bool ext_kind = op.kind == OpKind::ExtHead || op.kind == OpKind::ExtTail;
        require(op.kind == OpKind::InsHead || op.kind == OpKind::InsTail || ext_kind, lang);
        if (lang == Language::DequeTs && ext_kind) require(op.has_timestamp(), lang);
        if (lang == Language::Deque) require(!op.has_timestamp(), lang);
        insert = op.kind == OpKind::InsHead || op.kind == OpKind::InsTail;
        at_head = op.kind == OpKind::InsHead || op.kind == OpKind::ExtHead;
        break;
      }
      default: throw std::logic_error("not a sequence language");
    }
    if (insert) {
      if (at_head) {
        items.emplace_front(op.value, j);
      } else {
        items.emplace_back(op.value, j);
      }
      continue;
    }
    if (items.empty()) return Verdict::reject("extract from an empty structure", j);
    const auto [value, inserted_at] = at_head ? items.front() : items.back();
    if (value != op.value) return Verdict::reject("extracted value does not match", j);
    if (timestamped && op.timestamp != inserted_at) {
      return Verdict::reject("timestamp does not name the matching insert", j);
    }
    at_head ? items.pop_front() : items.pop_back();
  }
  if (!items.empty()) return Verdict::reject("structure not empty at end");
  return Verdict::accept();
}

Verdict check_dyck(std::span<const Operation> ops) {
  std::vector<Paren> open;
  std::uint64_t j = 0;
  for (const auto& op : ops) {
    ++j;
    require(op.is_paren(), Language::Dyck2);
    if (op.kind == OpKind::Open) {
      open.push_back(op.paren);
      continue;
    }
    if (open.empty()) return Verdict::reject("close without an open parenthesis", j);
    if (open.back() != op.paren) return Verdict::reject("close does not match the innermost open", j);
    open.pop_back();
  }
  if (!open.empty()) return Verdict::reject("unclosed parentheses at end");
  return Verdict::accept();
}

bool is_ins(const Operation& op) { return op.kind == OpKind::Ins; }
bool is_ext(const Operation& op) { return op.kind == OpKind::Ext; }

// Applies the leftmost rewrite; false when none applies.
bool rewrite_once(Transcript& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (is_ins(s[i]) && is_ext(s[i + 1]) && s[i].value > s[i + 1].value) {
      std::swap(s[i], s[i + 1]);
      return true;
    }
    if (i + 2 < n && is_ins(s[i]) && is_ext(s[i + 1]) && s[i].value == s[i + 1].value && is_ext(s[i + 2])) {
      std::rotate(s.begin() + i, s.begin() + i + 2, s.begin() + i + 3);
      return true;
    }
    if (i + 2 < n && is_ins(s[i]) && is_ins(s[i + 1]) && is_ext(s[i + 2]) &&
        s[i + 1].value == s[i + 2].value) {
      std::rotate(s.begin() + i, s.begin() + i + 1, s.begin() + i + 3);
      return true;
    }
  }
  return false;
}

}  // namespace

Verdict oracle_check(std::span<const Operation> transcript, Language lang) {
  switch (lang) {
    case Language::Pq: return check_pq(transcript);
    case Language::Dyck2: return check_dyck(transcript);
    default: return check_sequence(transcript, lang);
  }
}

std::uint64_t phi(std::span<const Operation> ops) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].is_extract()) total += i + 1;
  }
  return total;
}

GammaBlock rearrange_fixpoint(std::span<const Operation> block, RearrangeStats* stats) {
  Transcript s(block.begin(), block.end());
  for (const auto& op : s) {
    if (!is_ins(op) && !is_ext(op)) throw KindError("block operations must be plain inserts or extracts");
  }
  RearrangeStats local;
  local.initial_phi = phi(s);
  std::uint64_t current = local.initial_phi;
  while (rewrite_once(s)) {
    const std::uint64_t next = phi(s);
    if (next + 1 != current) throw std::logic_error("rewrite did not lower phi by exactly one");
    current = next;
    ++local.steps;
  }
  local.final_phi = current;
  if (stats) *stats = local;

  // Fixpoint shape: extracts, then ins(w) ext(w) pairs, then inserts.
  GammaBlock gamma;
  std::size_t i = 0;
  for (; i < s.size() && is_ext(s[i]); ++i) {
    if (!gamma.extracts.empty() && s[i].value < gamma.extracts.back()) {
      throw std::logic_error("fixpoint extract prefix is not ascending; block not locally consistent");
    }
    gamma.extracts.push_back(s[i].value);
  }
  for (; i + 1 < s.size() && is_ins(s[i]) && is_ext(s[i + 1]); i += 2) {
    if (s[i].value != s[i + 1].value) throw std::logic_error("block not locally consistent");
    gamma.matched_max = std::max(gamma.matched_max.value_or(0), s[i].value);
  }
  for (; i < s.size(); ++i) {
    if (!is_ins(s[i])) throw std::logic_error("fixpoint is not in canonical shape");
    gamma.inserts.push_back(s[i].value);
  }
  std::sort(gamma.inserts.begin(), gamma.inserts.end());
  return gamma;
}

}  // namespace pmc
