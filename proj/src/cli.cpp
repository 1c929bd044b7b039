#include "pmc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pmc/errors.hpp"
#include "pmc/genmut.hpp"
#include "pmc/oracle.hpp"
#include "pmc/reduction.hpp"
#include "pmc/stream.hpp"

namespace pmc {
namespace {

/// Passes operations through while keeping a copy for the oracle.
class TeeSource final : public OperationSource {
 public:
  TeeSource(OperationSource& inner, Transcript* copy) : inner_(inner), copy_(copy) {}

  std::optional<Operation> next() override {
    auto op = inner_.next();
    if (op && copy_) copy_->push_back(*op);
    return op;
  }
  std::optional<std::uint64_t> declared_length() const override { return inner_.declared_length(); }
  std::optional<Value> universe() const override { return inner_.universe(); }

 private:
  OperationSource& inner_;
  Transcript* copy_;
};

struct CheckArgs {
  std::string lang;
  std::string mode = "fp";
  std::uint64_t block_size = 0;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> length;
  std::optional<Value> universe;
  bool json = false;
  bool oracle = false;
  std::string input;
};

// Opens `path` ("-" is the standard input).
std::istream& open_input(const std::string& path, std::ifstream& file, std::istream& in) {
  if (path == "-") return in;
  file.open(path);
  if (!file) throw FormatError("cannot open '" + path + "'");
  return file;
}

void write_transcript(std::ostream& out, const Transcript& ops, Value universe) {
  out << format_header(ops.size(), universe) << '\n';
  for (const auto& op : ops) out << serialize(op) << '\n';
}

Value max_value(const Transcript& ops) {
  Value m = 1;
  for (const auto& op : ops) m = std::max(m, op.value);
  return m;
}

int do_check(const CheckArgs& args, std::istream& in, std::ostream& out) {
  const auto lang = parse_language(args.lang);
  if (!lang) throw ParamError("unknown language '" + args.lang + "'");
  CheckConfig config;
  config.mode = args.mode == "exact" ? CheckMode::Exact : CheckMode::Fingerprint;
  config.seed = args.seed;

  std::optional<std::uint64_t> length = args.length;
  std::optional<Value> universe = args.universe;
  if (args.input != "-") {
    std::ifstream scan_file(args.input);
    if (!scan_file) throw FormatError("cannot open '" + args.input + "'");
    const auto stats = scan_transcript(scan_file);
    if (!length) length = stats.header.length.value_or(stats.length);
    if (!universe) universe = stats.header.universe.value_or(std::max<Value>(stats.max_value, 1));
  }

  std::ifstream file;
  TextSource text(open_input(args.input, file, in));
  text.set_defaults(length, universe);
  if (!text.declared_length()) {
    throw ParamError("transcript length unknown: add a '# N=<len> U=<max>' header or pass --length");
  }
  config.length = *text.declared_length();
  if (*lang == Language::Dyck2) {
    config.universe = 2;
  } else if (text.universe()) {
    config.universe = *text.universe();
  } else {
    throw ParamError("universe unknown: add a '# N=<len> U=<max>' header or pass --universe");
  }
  if (config.universe == 0) config.universe = 1;
  config.block_length = args.block_size == 0 ? default_block_length(config.length) : args.block_size;

  Transcript copy;
  TeeSource source(text, args.oracle ? &copy : nullptr);
  const CheckOutcome outcome = run_check(*lang, source, config);

  CheckReport report;
  report.verdict = outcome.verdict;
  report.n = config.length;
  report.language = *lang;
  report.mode = config.mode;
  report.peak_state_cells = outcome.peak_state_cells;
  report.block_length = config.block_length;
  report.fp_error_bound = outcome.fp_error_bound;
  report.seed = config.seed;
  out << (args.json ? to_json(report) : to_text(report)) << '\n';

  if (args.oracle) {
    const Verdict truth = oracle_check(copy, *lang);
    if (truth.accepted != outcome.verdict.accepted) {
      out << "oracle disagreement: oracle " << (truth.accepted ? "accepts" : "rejects") << '\n';
      return kExitOracleDisagreement;
    }
  }
  return outcome.verdict.accepted ? kExitAccept : kExitReject;
}

}  // namespace

std::string to_json(const CheckReport& report) {
  nlohmann::json j;
  j["verdict"] = report.verdict.accepted ? "accept" : "reject";
  if (report.verdict.accepted) {
    j["reject_reason"] = nullptr;
  } else {
    j["reject_reason"] = {{"text", report.verdict.reason},
                          {"position", report.verdict.position ? nlohmann::json(*report.verdict.position)
                                                               : nlohmann::json(nullptr)}};
  }
  j["n"] = report.n;
  j["language"] = std::string(name(report.language));
  j["mode"] = report.mode == CheckMode::Exact ? "exact" : "fp";
  j["peak_state_cells"] = report.peak_state_cells;
  j["block_length"] = report.block_length;
  j["fp_error_bound"] = report.fp_error_bound;
  j["seed"] = report.seed;
  return j.dump();
}

std::string to_text(const CheckReport& report) {
  std::ostringstream s;
  s << (report.verdict.accepted ? "accept" : "reject") << " language=" << name(report.language)
    << " n=" << report.n << " mode=" << (report.mode == CheckMode::Exact ? "exact" : "fp")
    << " block_length=" << report.block_length << " peak_state_cells=" << report.peak_state_cells
    << " fp_error_bound=" << report.fp_error_bound << " seed=" << report.seed;
  if (!report.verdict.accepted) {
    s << " reason=\"" << report.verdict.reason << '"';
    if (report.verdict.position) s << " position=" << *report.verdict.position;
  }
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-pass checkers for priority-queue, stack, queue, deque and Dyck transcripts", "pmc"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check a transcript");
  check_cmd->add_option("--lang", check.lang, "pq|stack|queue|deque|dyck2|queue_ts|stack_ts|deque_ts")->required();
  check_cmd->add_option("--mode", check.mode, "exact|fp")->check(CLI::IsMember({"exact", "fp"}));
  check_cmd->add_option("--block-size", check.block_size, "Block length (default ceil(sqrt(N)))");
  check_cmd->add_option("--seed", check.seed, "Seed for the fingerprint evaluation points");
  check_cmd->add_option("--length", check.length, "Transcript length when there is no header");
  check_cmd->add_option("--universe", check.universe, "Largest value when there is no header");
  check_cmd->add_flag("--json", check.json, "Print the report as JSON");
  check_cmd->add_flag("--oracle", check.oracle, "Cross-check against the exact simulator");
  check_cmd->add_option("input", check.input, "Transcript file, or - for standard input")->required();

  std::string gen_lang;
  std::uint64_t gen_n = 0, gen_seed = 1;
  Value gen_universe = 16;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a valid transcript");
  gen_cmd->add_option("--lang", gen_lang)->required();
  gen_cmd->add_option("--n,-n", gen_n, "Length (even)")->required();
  gen_cmd->add_option("--universe", gen_universe, "Largest value");
  gen_cmd->add_option("--seed", gen_seed);

  std::string mut_kind, mut_input = "-";
  std::uint64_t mut_seed = 1;
  auto* mut_cmd = app.add_subcommand("mutate", "Apply one mutation to a transcript");
  mut_cmd->add_option("--kind", mut_kind,
                      "value_change|swap_adjacent|drop_op|duplicate_op|reorder_extract|timestamp_shift")
      ->required();
  mut_cmd->add_option("--seed", mut_seed);
  mut_cmd->add_option("input", mut_input);

  std::string red_from, red_input = "-";
  std::optional<std::uint64_t> red_length;
  auto* red_cmd = app.add_subcommand("reduce", "Map a Dyck transcript to a priority-queue transcript");
  red_cmd->add_option("--from", red_from)->required()->check(CLI::IsMember({"dyck2"}));
  red_cmd->add_option("--length", red_length, "Number of parentheses when there is no header");
  red_cmd->add_option("input", red_input);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAccept;
  } catch (const CLI::ParseError& e) {
    err << "pmc: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return do_check(check, in, out);

    if (gen_cmd->parsed()) {
      const auto lang = parse_language(gen_lang);
      if (!lang) throw ParamError("unknown language '" + gen_lang + "'");
      const Transcript ops = gen_valid(*lang, gen_n, gen_universe, gen_seed);
      write_transcript(out, ops, *lang == Language::Dyck2 ? 2 : gen_universe);
      return kExitAccept;
    }

    if (mut_cmd->parsed()) {
      const auto kind = parse_mutation(mut_kind);
      if (!kind) throw ParamError("unknown mutation '" + mut_kind + "'");
      std::ifstream file;
      TranscriptHeader header;
      const Transcript ops = read_transcript(open_input(mut_input, file, in), &header);
      const Transcript mutated = mutate(ops, *kind, mut_seed);
      write_transcript(out, mutated, std::max(header.universe.value_or(1), max_value(mutated)));
      return kExitAccept;
    }

    if (red_cmd->parsed()) {
      std::ifstream file;
      std::istream& input = open_input(red_input, file, in);
      if (red_input != "-") {
        std::ifstream scan(red_input);
        const auto stats = scan_transcript(scan);
        if (!red_length) red_length = stats.header.length.value_or(stats.length);
      }
      TextSource source(input);
      source.set_defaults(red_length, std::nullopt);
      if (!source.declared_length()) {
        throw ParamError("reduce needs the string length: add a '# N=<len>' header or pass --length");
      }
      PsiTransform transform(*source.declared_length());
      out << format_header(transform.length(), transform.universe()) << '\n';
      while (auto op = source.next()) out << serialize(transform.push(*op)) << '\n';
      transform.finish();
      return kExitAccept;
    }
  } catch (const std::exception& e) {
    err << "pmc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pmc
