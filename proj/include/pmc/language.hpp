#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pmc {

enum class Language { Pq, Stack, Queue, Deque, Dyck2, QueueTs, StackTs, DequeTs };

inline constexpr Language kAllLanguages[] = {
    Language::Pq,    Language::Stack,   Language::Queue,   Language::Deque,
    Language::Dyck2, Language::QueueTs, Language::StackTs, Language::DequeTs,
};

constexpr std::string_view name(Language lang) {
  switch (lang) {
    case Language::Pq: return "pq";
    case Language::Stack: return "stack";
    case Language::Queue: return "queue";
    case Language::Deque: return "deque";
    case Language::Dyck2: return "dyck2";
    case Language::QueueTs: return "queue_ts";
    case Language::StackTs: return "stack_ts";
    case Language::DequeTs: return "deque_ts";
  }
  return "?";
}

inline std::optional<Language> parse_language(std::string_view text) {
  for (Language lang : kAllLanguages) {
    if (name(lang) == text) return lang;
  }
  return std::nullopt;
}

constexpr bool is_timestamped(Language lang) {
  return lang == Language::QueueTs || lang == Language::StackTs || lang == Language::DequeTs;
}

}  // namespace pmc
