// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pmc/check.hpp"
#include "pmc/checkers.hpp"
#include "pmc/errors.hpp"
#include "pmc/fingerprint.hpp"
#include "pmc/genmut.hpp"
#include "pmc/oracle.hpp"
#include "pmc/pqcheck.hpp"
#include "pmc/reduction.hpp"
#include "pmc/subcheck.hpp"
#include "support.hpp"

using namespace pmc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Tally {
  std::uint64_t leaves = 0;
  std::uint64_t pruned = 0;  // subtrees skipped because both sides had already rejected for good
  std::uint64_t disagreements = 0;
  std::string first_bad;

  void disagree(const Transcript& t) {
    if (disagreements++ == 0) first_bad = testing::serialize_all(t);
  }
};

// True when the oracle rejects at a position inside `prefix`, so every
// extension is rejected as well.
bool dead_prefix(const Transcript& prefix, Language lang) {
  const Verdict v = oracle_check(prefix, lang);
  return !v.accepted && v.position.has_value();
}

// Enumerates every transcript of `length` whose j-th symbol is drawn from
// symbols(prefix), comparing `checker` (copied at each step) against the
// oracle at every leaf. A subtree is pruned only when the checker has
// latched a rejection and the oracle has rejected at a fixed position.
template <typename Checker>
void exhaust(const Checker& checker, Transcript& prefix, std::size_t length, Language lang,
             const std::function<void(const Transcript&, std::vector<Operation>&)>& symbols, Tally& tally) {
  if (checker.rejected() && dead_prefix(prefix, lang)) {
    ++tally.pruned;
    return;
  }
  if (prefix.size() == length) {
    Checker last = checker;
    ++tally.leaves;
    if (last.finish().accepted != oracle_check(prefix, lang).accepted) tally.disagree(prefix);
    return;
  }
  std::vector<Operation> next;
  symbols(prefix, next);
  for (const auto& op : next) {
    Checker child = checker;
    child.push(op);
    prefix.push_back(op);
    exhaust(child, prefix, length, lang, symbols, tally);
    prefix.pop_back();
  }
}

std::vector<Operation> plain_alphabet(Value universe) {
  std::vector<Operation> out;
  for (Value u = 1; u <= universe; ++u) {
    out.push_back(Operation::ins(u));
    out.push_back(Operation::ext(u));
  }
  return out;
}

std::vector<Operation> deque_alphabet(Value universe) {
  std::vector<Operation> out;
  for (Value u = 1; u <= universe; ++u) {
    out.push_back(Operation::ins_head(u));
    out.push_back(Operation::ins_tail(u));
    out.push_back(Operation::ext_head(u));
    out.push_back(Operation::ext_tail(u));
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// ---------------------------------------------------------------------------

void criterion1() {
  const auto start = Clock::now();
  std::uint64_t runs = 0, bad = 0;
  std::string first_bad;
  std::string detail;

  // Priority queue: the pipeline from scratch on every word.
  auto pq_sweep = [&](Value U, std::size_t max_n) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      const auto alphabet = plain_alphabet(U);
      const std::uint64_t l = default_block_length(n);
      testing::for_each_word(n, alphabet.size(), [&](const std::vector<std::size_t>& w) {
        Transcript t;
        t.reserve(n);
        for (auto s : w) t.push_back(alphabet[s]);
        SpanSource src(t);
        const auto got = pq_pipeline(src, PqPipelineConfig{n, U, std::max<std::uint64_t>(l, 1)}, ExactCells());
        ++runs;
        if (got.verdict.accepted != oracle_check(t, Language::Pq).accepted) {
          if (bad++ == 0) first_bad = testing::serialize_all(t);
        }
      });
    }
  };
  for (Value U = 1; U <= 3; ++U) pq_sweep(U, U == 2 ? 10 : 8);
  detail += "pq " + std::to_string(runs) + " runs";

  auto sweep = [&](const char* label, Language lang, auto make, auto alphabet_of, std::size_t U_max,
                   std::size_t n_max_u2) {
    Tally tally;
    std::uint64_t expected = 0;
    for (Value U = 1; U <= U_max; ++U) {
      const auto alphabet = alphabet_of(U);
      const std::size_t max_n = U == 2 ? n_max_u2 : 8;
      for (std::size_t n = 0; n <= max_n; ++n) {
        expected += ipow(alphabet.size(), n);
        Transcript prefix;
        auto symbols = [&](const Transcript&, std::vector<Operation>& out) { out = alphabet; };
        exhaust(make(n, U), prefix, n, lang, symbols, tally);
      }
    }
    bad += tally.disagreements;
    if (first_bad.empty()) first_bad = tally.first_bad;
    detail += std::string("; ") + label + " " + std::to_string(expected) + " words (" +
              std::to_string(tally.leaves) + " leaves, " + std::to_string(tally.pruned) + " dead subtrees)";
  };
  auto l_of = [](std::size_t n) { return std::max<std::uint64_t>(default_block_length(n), 1); };
  sweep("stack", Language::Stack,
        [&](std::size_t n, Value U) { return BasicStackChecker<ExactCells>(n, U, l_of(n), ExactCells()); },
        plain_alphabet, 3, 10);
  sweep("queue", Language::Queue, [&](std::size_t n, Value) { return BasicQueueChecker<ExactCells>(n, ExactCells()); },
        plain_alphabet, 3, 8);
  sweep("deque", Language::Deque,
        [&](std::size_t n, Value U) { return BasicDequeChecker<ExactCells>(n, U, l_of(n), ExactCells()); },
        deque_alphabet, 3, 8);

  detail += "; disagreements " + std::to_string(bad);
  if (bad) detail += " first " + first_bad;
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.1fs", seconds_since(start));
  report(1, "exhaustive oracle equivalence, exact mode", bad == 0, detail + buf);
}

// Generic one-pass run in the production (fingerprint) mode.
bool fp_accepts(Language lang, const Transcript& t, Value universe, std::uint64_t seed) {
  SpanSource src(t);
  CheckConfig config;
  config.mode = CheckMode::Fingerprint;
  config.length = t.size();
  config.universe = universe;
  config.seed = seed;
  return run_check(lang, src, config).verdict.accepted;
}

Value max_value(const Transcript& t, Value floor) {
  Value m = floor;
  for (const auto& op : t) m = std::max(m, op.value);
  return m;
}

void criterion2() {
  const auto start = Clock::now();
  std::uint64_t runs = 0, false_rejects = 0;
  std::string where;
  for (Language lang : kAllLanguages) {
    for (std::uint64_t n : {256u, 1024u, 4096u}) {
      for (std::uint64_t i = 0; i < 1000; ++i) {
        const std::uint64_t seed = n * 1'000'003 + i;
        const Value U = n;
        const Transcript t = gen_valid(lang, n, U, seed);
        ++runs;
        if (!fp_accepts(lang, t, U, seed ^ 0x5bd1e995)) {
          if (false_rejects++ == 0) where = std::string(name(lang)) + " N=" + std::to_string(n);
        }
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu runs over 8 languages, false rejects %llu%s%s; %.1fs",
                static_cast<unsigned long long>(runs), static_cast<unsigned long long>(false_rejects),
                where.empty() ? "" : " first at ", where.c_str(), seconds_since(start));
  report(2, "valid transcripts always accepted in fingerprint mode", false_rejects == 0, buf);
}

void criterion3() {
  const auto start = Clock::now();
  const std::uint64_t n = 4096;
  std::uint64_t mutants = 0, false_accepts = 0, attempts = 0;
  std::string detail;
  for (Language lang : kAllLanguages) {
    std::uint64_t found = 0;
    std::map<std::string, int> per_kind;
    for (std::uint64_t i = 0; found < 1000 && i < 100000; ++i) {
      ++attempts;
      const std::uint64_t seed = 77'000'000 + i;
      const Value U = 64;
      const Transcript t = gen_valid(lang, n, U, seed);
      const MutationKind kind = kAllMutations[i % std::size(kAllMutations)];
      Transcript m;
      try {
        m = mutate(t, kind, seed);
      } catch (const ParamError&) {
        continue;
      }
      if (oracle_check(m, lang).accepted) continue;
      ++found;
      ++per_kind[std::string(name(kind))];
      if (fp_accepts(lang, m, max_value(m, U), seed * 31 + 7)) ++false_accepts;
    }
    mutants += found;
    if (found < 1000) detail += std::string(name(lang)) + " only " + std::to_string(found) + " mutants; ";
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu rejecting mutants at N=4096, false accepts %llu; %.1fs",
                static_cast<unsigned long long>(mutants), static_cast<unsigned long long>(false_accepts),
                seconds_since(start));
  report(3, "invalid transcripts rejected in fingerprint mode", false_accepts == 0 && mutants == 8000,
         detail + buf);
}

// All inserts, then every value extracted in ascending order.
Transcript fill_then_drain(std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Value> values(n / 2);
  for (auto& v : values) v = 1 + rng() % n;
  Transcript t;
  for (Value v : values) t.push_back(Operation::ins(v));
  std::sort(values.begin(), values.end());
  for (Value v : values) t.push_back(Operation::ext(v));
  return t;
}

void criterion4() {
  const auto start = Clock::now();
  // Peak over a fixed family of workloads: random-walk transcripts and a
  // fill-then-drain transcript whose blocks are all inserts or all extracts.
  std::vector<std::size_t> peaks;
  std::string detail;
  bool ok = true;
  for (std::uint64_t n : {10'000u, 1'000'000u}) {
    const std::uint64_t l = default_block_length(n);
    const double bound = 8 * std::sqrt(static_cast<double>(n));
    std::size_t peak = 0, walk_min = SIZE_MAX, walk_max = 0, fill = 0;
    for (int w = 0; w <= 8; ++w) {
      const Transcript t = w < 8 ? gen_valid(Language::Pq, n, n, 4242 + n + w) : fill_then_drain(n, n);
      SpanSource src(t);
      const auto outcome =
          pq_pipeline(src, PqPipelineConfig{n, n, l}, Fingerprint(FingerprintParams::from_seed(9 + w, 0)));
      ok = ok && outcome.verdict.accepted;
      peak = std::max(peak, outcome.peak_state_cells);
      if (w < 8) {
        walk_min = std::min(walk_min, outcome.peak_state_cells);
        walk_max = std::max(walk_max, outcome.peak_state_cells);
      } else {
        fill = outcome.peak_state_cells;
      }
    }
    ok = ok && peak <= bound;
    peaks.push_back(peak);
    char buf[200];
    std::snprintf(buf, sizeof buf, "N=%llu l=%llu peak=%zu cells (bound %.0f; random walks %zu..%zu, fill-drain %zu); ",
                  static_cast<unsigned long long>(n), static_cast<unsigned long long>(l), peak, bound, walk_min,
                  walk_max, fill);
    detail += buf;
  }
  const double growth = static_cast<double>(peaks[1]) / static_cast<double>(peaks[0]);
  ok = ok && growth <= 11.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "growth x%.2f for 100x N; %.1fs", growth, seconds_since(start));
  report(4, "peak state within 8 sqrt(N) cells, sublinear growth", ok, detail + buf);
}

void criterion5() {
  const auto start = Clock::now();
  std::uint64_t strings = 0, bad = 0;
  std::string first_bad;
  for (std::size_t len = 0; len <= 10; ++len) {
    testing::for_each_word(len, 4, [&](const std::vector<std::size_t>& w) {
      std::string s;
      for (auto c : w) s += "()[]"[c];
      const Transcript p = parens_from_string(s);
      ++strings;
      if (oracle_check(p, Language::Dyck2).accepted != oracle_check(psi(p), Language::Pq).accepted) {
        if (bad++ == 0) first_bad = s;
      }
    });
  }
  const Transcript worked = psi(parens_from_string("(()[])"));
  const Transcript expected = testing::ops({{'I', 12}, {'I', 10}, {'E', 10}, {'I', 9}, {'E', 9}, {'E', 12}});
  const bool example = worked == expected;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%llu strings, mismatches %llu%s%s; worked example %s; %.1fs",
                static_cast<unsigned long long>(strings), static_cast<unsigned long long>(bad),
                first_bad.empty() ? "" : " first ", first_bad.c_str(), example ? "reproduced" : "differs",
                seconds_since(start));
  report(5, "parenthesis reduction preserves membership", bad == 0 && example, buf);
}

struct BlockTally {
  std::uint64_t blocks = 0, consistent = 0, bad = 0, rewrite_steps = 0;
  std::string first_bad;
  void fail(const Transcript& t, const char* why) {
    if (bad++ == 0) first_bad = std::string(why) + " " + testing::serialize_all(t);
  }
};

// Compares one block three ways: incremental sub-check, the quantified
// definition and the rewriting fixpoint.
void compare_block(const Transcript& block, bool subcheck_consistent, const GammaBlock* gamma, BlockTally& tally) {
  ++tally.blocks;
  if (subcheck_consistent != testing::locally_consistent(block)) return tally.fail(block, "consistency");
  if (!subcheck_consistent) return;
  ++tally.consistent;
  RearrangeStats stats;
  try {
    if (rearrange_fixpoint(block, &stats) != *gamma) return tally.fail(block, "gamma");
  } catch (const std::logic_error&) {
    return tally.fail(block, "rewrite potential");
  }
  if (stats.initial_phi - stats.final_phi != stats.steps) return tally.fail(block, "potential");
  tally.rewrite_steps += stats.steps;
}

void exhaust_blocks(const SubChecker& checker, Transcript& prefix, std::size_t max_len,
                    const std::vector<Operation>& alphabet, BlockTally& tally, std::uint64_t& dead) {
  SubChecker closing = checker;
  const GammaBlock gamma = closing.finish();
  compare_block(prefix, true, &gamma, tally);
  if (prefix.size() == max_len) return;
  for (const auto& op : alphabet) {
    SubChecker child = checker;
    prefix.push_back(op);
    if (child.push(op)) {
      // Violations persist under extension, so the subtree is inconsistent.
      compare_block(prefix, false, nullptr, tally);
      dead += 1;
    } else {
      exhaust_blocks(child, prefix, max_len, alphabet, tally, dead);
    }
    prefix.pop_back();
  }
}

void criterion6() {
  const auto start = Clock::now();
  BlockTally exhaustive;
  std::uint64_t dead = 0;
  {
    Transcript prefix;
    exhaust_blocks(SubChecker(), prefix, 10, plain_alphabet(3), exhaustive, dead);
  }

  BlockTally random;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100000; ++trial) {
    const Value U = std::array<Value, 4>{3, 5, 20, 200}[trial % 4];
    Transcript block;
    if (trial % 3 == 2) {
      const std::size_t len = 1 + rng() % 50;
      for (std::size_t i = 0; i < len; ++i) {
        const Value u = 1 + rng() % U;
        block.push_back(rng() % 2 ? Operation::ins(u) : Operation::ext(u));
      }
    } else {
      // Windows of valid transcripts are locally consistent.
      const Transcript t = gen_valid(Language::Pq, 120, U, rng());
      const std::size_t len = 1 + rng() % 50;
      const std::size_t from = rng() % (t.size() - len + 1);
      block.assign(t.begin() + from, t.begin() + from + len);
      if (trial % 3 == 1) {
        try {
          block = mutate(block, kAllMutations[rng() % 5], rng());
        } catch (const ParamError&) {
        }
      }
    }
    const auto result = sub_check(block);
    const auto* gamma = std::get_if<GammaBlock>(&result);
    compare_block(block, gamma != nullptr, gamma, random);
  }

  const bool ok = exhaustive.bad == 0 && random.bad == 0;
  char buf[400];
  std::snprintf(buf, sizeof buf,
                "exhaustive |block|<=10 U=3: %llu blocks visited (%llu consistent, %llu minimal violations); "
                "random: %llu blocks (%llu consistent); %llu rewrite steps each lowering potential by 1; "
                "mismatches %llu%s%s; %.1fs",
                static_cast<unsigned long long>(exhaustive.blocks), static_cast<unsigned long long>(exhaustive.consistent),
                static_cast<unsigned long long>(dead), static_cast<unsigned long long>(random.blocks),
                static_cast<unsigned long long>(random.consistent),
                static_cast<unsigned long long>(exhaustive.rewrite_steps + random.rewrite_steps),
                static_cast<unsigned long long>(exhaustive.bad + random.bad),
                exhaustive.first_bad.empty() && random.first_bad.empty() ? "" : " first ",
                (exhaustive.first_bad + random.first_bad).c_str(), seconds_since(start));
  report(6, "sub-check equals the rearrangement fixpoint", ok, buf);
}

void criterion7() {
  const auto start = Clock::now();
  std::mt19937_64 rng(7);
  std::uint64_t steps = 0, violations = 0;
  std::string first;
  auto violate = [&](const std::string& what) {
    if (violations++ == 0) first = what;
  };
  for (int run = 0; run < 1000; ++run) {
    const std::uint64_t n = 2 * (1 + rng() % 256);
    const Value U = 1 + rng() % 12;
    const Transcript t = gen_valid(Language::Pq, n, U, rng());
    const std::uint64_t l = default_block_length(n);
    const auto epochs = static_cast<std::uint32_t>(pq_epoch_count(n, l));
    ExactPqChecker checker(epochs, U, ExactCells());
    std::vector<std::int64_t> count(U + 1, 0);
    std::vector<Value> before(epochs + 1, 0);

    auto feed = [&](bool extract, Value v) {
      extract ? checker.extract(v) : checker.insert(v);
      count[v] += extract ? -1 : 1;
      ++steps;
      const EpochState& f = checker.epoch_state();
      for (std::uint32_t k = 1; k <= epochs; ++k) {
        if (k > 1 && f.f(k) > f.f(k - 1)) violate("f increases in k");
        if (f.f(k) < before[k]) violate("f decreases over time");
        before[k] = f.f(k);
      }
      for (Value u = 1; u <= U; ++u) {
        const std::uint32_t b = f.assign(u);
        if (count[u] != checker.x(b, u) - checker.y(b, u)) violate("count identity at u=" + std::to_string(u));
        for (std::uint32_t k = 1; k < b; ++k) {
          if (checker.x(k, u) != checker.y(k, u)) violate("X != Y below the assigned epoch");
        }
      }
    };

    for (std::size_t from = 0; from < t.size(); from += l) {
      const std::size_t len = std::min<std::size_t>(l, t.size() - from);
      const auto result = sub_check(std::span(t).subspan(from, len));
      const auto* g = std::get_if<GammaBlock>(&result);
      if (!g) {
        violate("valid transcript has an inconsistent block");
        break;
      }
      checker.begin_epoch();
      for (Value v : g->extracts) feed(true, v);
      if (g->matched_max) feed(false, *g->matched_max);
      checker.begin_epoch();
      if (g->matched_max) feed(true, *g->matched_max);
      for (Value u : g->inserts) feed(false, u);
    }
    if (!checker.finalize().accepted) violate("valid transcript rejected");
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "1000 valid transcripts, %llu steps, violations %llu%s%s; %.1fs",
                static_cast<unsigned long long>(steps), static_cast<unsigned long long>(violations),
                first.empty() ? "" : " first: ", first.c_str(), seconds_since(start));
  report(7, "epoch-array invariants on valid runs", violations == 0, buf);
}

void criterion8() {
  const auto start = Clock::now();
  using u128 = unsigned __int128;
  std::mt19937_64 rng(88);
  std::uint64_t mismatches = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint64_t d = trial % 10 == 0 ? 1 + rng() % 200000 : 1 + rng() % 2000;
    const std::uint64_t modulus = trial % 2 ? kMersenne61 : (std::uint64_t{1} << 31) - 1;
    const auto params = FingerprintParams::from_seed(rng(), d, modulus);
    Fingerprint fp(params);
    std::map<std::uint64_t, __int128> cells;
    const int updates = 1 + static_cast<int>(rng() % 40);
    for (int k = 0; k < updates; ++k) {
      const std::uint64_t i = rng() % (d + 1);
      const auto delta = static_cast<std::int64_t>(rng()) >> (rng() % 64);
      fp.add(i, delta);
      cells[i] += delta;
    }
    for (std::size_t j = 0; j < params.point_count; ++j) {
      // Horner-free evaluation by walking powers upwards in 128-bit arithmetic.
      const u128 p = params.modulus;
      u128 total = 0, power = 1;
      std::uint64_t at = 0;
      for (const auto& [index, value] : cells) {
        for (; at < index; ++at) power = power * params.points[j] % p;
        const __int128 r = value % static_cast<__int128>(p);
        const u128 coeff = static_cast<u128>(r < 0 ? r + static_cast<__int128>(p) : r);
        total = (total + coeff * power) % p;
      }
      if (fp.value(j) != static_cast<std::uint64_t>(total)) ++mismatches;
    }
  }

  // Small field: for random distinct arrays, count the points that collide.
  const std::uint64_t p = 101;
  std::uint64_t pairs = 0, over = 0;
  double worst = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t d = 1 + rng() % 20;
    std::vector<std::int64_t> a(d + 1), b(d + 1);
    for (std::uint64_t i = 0; i <= d; ++i) {
      a[i] = static_cast<std::int64_t>(rng() % 5) - 2;
      b[i] = rng() % 3 == 0 ? a[i] : static_cast<std::int64_t>(rng() % 5) - 2;
    }
    if (trial % 4 == 0) b[d] = a[d] + p;  // differs only by a multiple of p: equal over the field
    bool differ = false;
    for (std::uint64_t i = 0; i <= d; ++i) differ = differ || field::from_signed(a[i], p) != field::from_signed(b[i], p);
    if (!differ) continue;
    ++pairs;
    std::uint64_t collisions = 0;
    for (std::uint64_t r = 1; r < p; ++r) {
      const auto params = FingerprintParams::with_points(p, {r}, d);
      Fingerprint fa(params), fb(params);
      for (std::uint64_t i = 0; i <= d; ++i) {
        fa.add(i, a[i]);
        fb.add(i, b[i]);
      }
      if (fp_equal(fa, fb)) ++collisions;
    }
    const double rate = static_cast<double>(collisions) / static_cast<double>(p - 1);
    worst = std::max(worst, rate * static_cast<double>(p - 1) / static_cast<double>(d));
    if (collisions > d) ++over;
  }
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "10000 random arrays vs 128-bit closed form: %llu mismatches; p=101: %llu distinct pairs, "
                "%llu above d/(p-1), worst rate/bound %.2f; %.1fs",
                static_cast<unsigned long long>(mismatches), static_cast<unsigned long long>(pairs),
                static_cast<unsigned long long>(over), worst, seconds_since(start));
  report(8, "fingerprint closed form and small-field collision rate", mismatches == 0 && over == 0, buf);
}

void criterion9() {
  const auto start = Clock::now();
  const Value U = 2;
  std::string detail;
  std::uint64_t bad = 0;
  std::string first_bad;

  auto sweep = [&](const char* label, Language lang, Discipline discipline, auto symbols, auto proto) {
    Tally tally;
    for (std::size_t n = 0; n <= 8; ++n) {
      Transcript prefix;
      exhaust(BasicTsChecker<decltype(proto)>(discipline, n, U, proto), prefix, n, lang, symbols, tally);
    }
    bad += tally.disagreements;
    if (first_bad.empty()) first_bad = tally.first_bad;
    detail += std::string(label) + " " + std::to_string(tally.leaves) + " leaves + " +
              std::to_string(tally.pruned) + " dead subtrees; ";
  };

  // Queue and stack: extracts carry every timestamp in [1, j-1].
  const std::function<void(const Transcript&, std::vector<Operation>&)> plain_ts =
      [&](const Transcript& prefix, std::vector<Operation>& out) {
        out.clear();
        const std::uint64_t j = prefix.size() + 1;
        for (Value u = 1; u <= U; ++u) {
          out.push_back(Operation::ins(u));
          for (std::uint64_t t = 1; t < j; ++t) out.push_back(Operation::ext_ts(u, t));
        }
      };
  // Deque: extracts at either end name any earlier insert position.
  const std::function<void(const Transcript&, std::vector<Operation>&)> deque_ts =
      [&](const Transcript& prefix, std::vector<Operation>& out) {
        out.clear();
        for (Value u = 1; u <= U; ++u) {
          out.push_back(Operation::ins_head(u));
          out.push_back(Operation::ins_tail(u));
          bool any = false;
          for (std::uint64_t t = 1; t <= prefix.size(); ++t) {
            if (!prefix[t - 1].is_insert()) continue;
            any = true;
            out.push_back(Operation::ext_head(u, t));
            out.push_back(Operation::ext_tail(u, t));
          }
          if (!any) out.push_back(Operation::ext_head(u, prefix.size() + 1));
        }
      };
  const Fingerprint fp(FingerprintParams::from_seed(99, 0));
  sweep("queue_ts exact", Language::QueueTs, Discipline::Queue, plain_ts, ExactCells());
  sweep("queue_ts fp", Language::QueueTs, Discipline::Queue, plain_ts, fp);
  sweep("stack_ts exact", Language::StackTs, Discipline::Stack, plain_ts, ExactCells());
  sweep("stack_ts fp", Language::StackTs, Discipline::Stack, plain_ts, fp);
  sweep("deque_ts fp", Language::DequeTs, Discipline::Deque, deque_ts, fp);

  // Mutants of valid transcripts, every mutation kind.
  std::uint64_t mutants = 0;
  for (Language lang : {Language::QueueTs, Language::StackTs, Language::DequeTs}) {
    const Discipline d = lang == Language::QueueTs   ? Discipline::Queue
                         : lang == Language::StackTs ? Discipline::Stack
                                                     : Discipline::Deque;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
      const Transcript t = gen_valid(lang, 2 + 2 * (seed % 4), U, seed);
      for (MutationKind kind : kAllMutations) {
        Transcript m;
        try {
          m = mutate(t, kind, seed);
        } catch (const ParamError&) {
          continue;
        }
        const Value mu = max_value(m, U);
        BasicTsChecker<ExactCells> exact(d, m.size(), mu, ExactCells());
        TsChecker fast(d, m.size(), mu, fp);
        for (const auto& op : m) {
          exact.push(op);
          fast.push(op);
        }
        ++mutants;
        const bool truth = oracle_check(m, lang).accepted;
        if (exact.finish().accepted != truth || fast.finish().accepted != truth) {
          if (bad++ == 0) first_bad = testing::serialize_all(m);
        }
      }
    }
  }
  detail += std::to_string(mutants) + " mutants; ";

  // Instrumented state: independent of the stream length.
  const bool constant_state = TsChecker::state_cells() == BasicTsChecker<ExactCells>::state_cells() &&
                              sizeof(TsChecker) <= 2 * sizeof(Fingerprint) + 16 * sizeof(std::uint64_t);
  {
    TsChecker big(Discipline::Deque, 2'000'000, 1'000'000, fp);
    const Transcript t = gen_valid(Language::DequeTs, 2'000'000, 1'000'000, 5);
    for (const auto& op : t) big.push(op);
    if (!big.finish().accepted) ++bad;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "disagreements %llu%s%s; state %zu cells, %zu bytes (2 fingerprints of %zu bytes + scalars); %.1fs",
                static_cast<unsigned long long>(bad), first_bad.empty() ? "" : " first ", first_bad.c_str(),
                TsChecker::state_cells(), sizeof(TsChecker), sizeof(Fingerprint), seconds_since(start));
  report(9, "timestamped checkers match their oracles", bad == 0 && constant_state, detail + buf);
}

void criterion10() {
  const std::uint64_t n = 1'000'000;
  const Transcript t = gen_valid(Language::Pq, n, 1u << 20, 10);
  const auto start = Clock::now();
  SpanSource src(t);
  const auto outcome = pq_pipeline(src, PqPipelineConfig{n, 1u << 20, default_block_length(n)},
                                   Fingerprint(FingerprintParams::from_seed(10, 0)));
  const double elapsed = seconds_since(start);
  char buf[120];
  std::snprintf(buf, sizeof buf, "10^6 operations in %.2fs, verdict %s", elapsed,
                outcome.verdict.accepted ? "accept" : "reject");
  report(10, "throughput", outcome.verdict.accepted && elapsed <= 10.0, buf);
}

}  // namespace

int main(int argc, char** argv) {
  // Optional list of criterion numbers to run; default all.
  std::vector<bool> run(11, argc == 1);
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id >= 1 && id <= 10) run[id] = true;
  }
  const std::function<void()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                            criterion6, criterion7, criterion8, criterion9, criterion10};
  for (int id = 1; id <= 10; ++id) {
    if (!run[id]) continue;
    try {
      criteria[id - 1]();
    } catch (const std::exception& e) {
      report(id, "aborted", false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
