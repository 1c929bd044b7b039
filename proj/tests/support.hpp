#pragma once

// Helpers shared by the unit tests and the acceptance suite.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pmc/operation.hpp"

namespace pmc::testing {

inline Transcript ops(std::initializer_list<std::pair<char, Value>> list) {
  Transcript out;
  for (auto [tag, v] : list) out.push_back(tag == 'I' ? Operation::ins(v) : Operation::ext(v));
  return out;
}

inline std::string serialize_all(std::span<const Operation> t) {
  std::string out;
  for (const auto& op : t) {
    if (!out.empty()) out += ", ";
    out += serialize(op);
  }
  return "<" + out + ">";
}

// Local consistency straight from the two quantified conditions, O(n^3).
inline bool locally_consistent(std::span<const Operation> s) {
  const auto count_between = [&](std::size_t from, std::size_t to, Value u) {
    std::int64_t c = 0;
    for (std::size_t j = from; j < to; ++j) {
      if (s[j].value != u) continue;
      c += s[j].kind == OpKind::Ins ? 1 : -1;
    }
    return c;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = i + 1; k < s.size(); ++k) {
      if (s[k].kind != OpKind::Ext) continue;
      const Value u = s[i].value, v = s[k].value;
      if (s[i].kind == OpKind::Ins && u < v && count_between(i + 1, k, u) >= 0) return false;
      if (s[i].kind == OpKind::Ext && u > v && count_between(i + 1, k, v) <= 0) return false;
    }
  }
  return true;
}

// Calls `visit` with every word of `length` symbols over `alphabet` symbols.
inline void for_each_word(std::size_t length, std::size_t alphabet,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> word(length, 0);
  while (true) {
    visit(word);
    std::size_t i = 0;
    while (i < length && ++word[i] == alphabet) word[i++] = 0;
    if (i == length) return;
  }
}

}  // namespace pmc::testing
