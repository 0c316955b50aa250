#include "gblock/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gblock/block.hpp"
#include "gblock/character.hpp"
#include "gblock/partition.hpp"
#include "gblock/sweep.hpp"

namespace gblock::cli {

namespace {

struct Config {
  std::string format = "plain";
  int jobs = 1;
  bool no_cache = false;
  bool no_meta = false;

  std::string partition_text;
  std::string nu_text;
  std::string class_text;
  std::string core_text = "-";
  int e = 0;
  int weight = 0;
  int table_n = 0;
  std::string claim;
  std::string e_range = "2..5";
  int max_n = -1;
  int max_size = 8;
};

int default_jobs() {
  if (const char* env = std::getenv("GBLOCK_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

Json string_list(const std::vector<Partition>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(render(p));
  return out;
}

std::string joined(const std::vector<Partition>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + render(p);
  return s.empty() ? "{}" : s;
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw std::invalid_argument("format '" + cfg.format + "' is not supported by this command");
}

int cmd_core(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"plain", "json"});
  const Partition p = parse_partition(cfg.partition_text);
  const Partition core = e_core(p, cfg.e);
  const int weight = e_weight(p, cfg.e);
  if (cfg.format == "json") {
    Json j;
    j["partition"] = render(p);
    j["e"] = cfg.e;
    j["core"] = render(core);
    j["weight"] = weight;
    out << j.dump(2) << '\n';
  } else {
    out << "core: " << render(core) << "\nweight: " << weight << '\n';
  }
  return kSuccess;
}

int cmd_char(const Config& cfg, CharacterEngine& engine, std::ostream& out) {
  require_format(cfg, {"plain", "json"});
  const Partition nu = parse_partition(cfg.nu_text);
  const CycleType lambda(parse_partition(cfg.class_text));
  const Int v = engine.value(nu, lambda);
  if (cfg.format == "json") {
    Json j;
    j["nu"] = render(nu);
    j["class"] = render(lambda.partition());
    j["value"] = std::to_string(v);
    out << j.dump(2) << '\n';
  } else {
    out << v << '\n';
  }
  return kSuccess;
}

BlockId block_from(const Config& cfg) { return BlockId(cfg.e, parse_partition(cfg.core_text), cfg.weight); }

Json block_json(const BlockId& b) {
  Json j;
  j["e"] = b.e();
  j["core"] = render(b.core());
  j["weight"] = b.weight();
  j["n"] = b.n();
  return j;
}

int cmd_count(const Config& cfg, CharacterEngine& engine, std::ostream& out) {
  require_format(cfg, {"plain", "json"});
  const BlockId b = block_from(cfg);
  const auto report = c_mu(engine, b, CycleType(parse_partition(cfg.class_text)));
  if (cfg.format == "json") {
    Json j = block_json(b);
    j["class"] = render(report.class_label.partition());
    j["count"] = report.count;
    j["witnesses"] = string_list(report.witnesses);
    out << j.dump(2) << '\n';
  } else {
    out << report.count << "\nwitnesses: " << joined(report.witnesses) << '\n';
  }
  return kSuccess;
}

int cmd_extremal(const Config& cfg, CharacterEngine& engine, std::ostream& out) {
  require_format(cfg, {"plain", "json"});
  const BlockId b = block_from(cfg);
  const Partition lambda = extremal_lambda(b);
  const auto report = c_mu(engine, b, CycleType(lambda));
  if (cfg.format == "json") {
    Json j = block_json(b);
    j["class"] = render(lambda);
    j["count"] = report.count;
    j["witnesses"] = string_list(report.witnesses);
    out << j.dump(2) << '\n';
  } else {
    out << render(lambda) << "\ncount: " << report.count << "\nwitnesses: " << joined(report.witnesses) << '\n';
  }
  return kSuccess;
}

int cmd_block(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"plain", "json"});
  const BlockId b = block_from(cfg);
  const auto members = block_partitions(b);
  if (cfg.format == "json") {
    Json j = block_json(b);
    j["partitions"] = string_list(members);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& p : members) out << render(p) << '\n';
  }
  return kSuccess;
}

int cmd_table(const Config& cfg, CharacterEngine& engine, std::ostream& out) {
  const auto t = character_table(engine, cfg.table_n);
  if (cfg.format == "json") {
    Json j;
    j["n"] = t->n;
    j["classes"] = string_list(t->classes);
    j["characters"] = string_list(t->characters);
    Json values = Json::array();
    for (Int v : t->values) values.push_back(std::to_string(v));
    j["values"] = std::move(values);
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << quoted("character");
    for (const auto& c : t->classes) out << ',' << quoted(render(c));
    out << '\n';
    for (std::size_t r = 0; r < t->characters.size(); ++r) {
      out << quoted(render(t->characters[r]));
      for (std::size_t c = 0; c < t->classes.size(); ++c) out << ',' << t->at(r, c);
      out << '\n';
    }
  } else {
    std::vector<std::size_t> width(t->classes.size() + 1, 0);
    for (const auto& p : t->characters) width[0] = std::max(width[0], render(p).size());
    for (std::size_t c = 0; c < t->classes.size(); ++c) {
      width[c + 1] = render(t->classes[c]).size();
      for (std::size_t r = 0; r < t->characters.size(); ++r)
        width[c + 1] = std::max(width[c + 1], std::to_string(t->at(r, c)).size());
    }
    out << std::setw(static_cast<int>(width[0])) << "";
    for (std::size_t c = 0; c < t->classes.size(); ++c)
      out << "  " << std::setw(static_cast<int>(width[c + 1])) << render(t->classes[c]);
    out << '\n';
    for (std::size_t r = 0; r < t->characters.size(); ++r) {
      out << std::left << std::setw(static_cast<int>(width[0])) << render(t->characters[r]) << std::right;
      for (std::size_t c = 0; c < t->classes.size(); ++c)
        out << "  " << std::setw(static_cast<int>(width[c + 1])) << t->at(r, c);
      out << '\n';
    }
  }
  return kSuccess;
}

int cmd_verify(const Config& cfg, CharacterEngine& engine, std::ostream& out) {
  require_format(cfg, {"plain", "json"});
  auto max_n = [&](int fallback) { return cfg.max_n >= 0 ? cfg.max_n : fallback; };
  const std::string& c = cfg.claim;
  SweepReport report;
  if (c == "theorem1")
    report = verify_theorem1(engine, parse_range(cfg.e_range), max_n(12), cfg.jobs);
  else if (c == "dichotomy")
    report = verify_dichotomy(engine, parse_range(cfg.e_range), max_n(12), cfg.jobs);
  else if (c == "remark1")
    report = verify_remark1(engine, parse_range(cfg.e_range), max_n(10), cfg.jobs);
  else if (c == "lemma1")
    report = lemma1_sweep(cfg.max_size, cfg.jobs);
  else if (c == "remark2")
    report = verify_remark2(engine, max_n(10), -1, cfg.jobs);
  else if (c == "chibar")
    report = verify_chibar(engine, max_n(10), cfg.jobs);
  else
    report = nonvanishing_row_structure_check(engine, parse_range(cfg.e_range), max_n(12), cfg.jobs);

  if (cfg.format == "json")
    out << to_json(report, !cfg.no_meta).dump(2) << '\n';
  else
    out << to_text(report);
  return report.pass() ? kSuccess : kVerificationFailed;
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument("malformed range '" + text + "'");
    return v;
  };
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = parse_int(text.substr(0, dots));
    int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    out.push_back(parse_int(text));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  cfg.jobs = default_jobs();

  CLI::App app{"Exact character counts in generalized blocks of symmetric groups", "gblock"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps (default: $GBLOCK_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-cache", cfg.no_cache, "Disable the character memo");
  app.add_flag("--no-meta", cfg.no_meta, "Omit the timestamp from JSON reports");

  auto* core = app.add_subcommand("core", "e-core and e-weight of a partition");
  core->add_option("--e", cfg.e, "e")->required()->check(CLI::PositiveNumber);
  core->add_option("partition", cfg.partition_text, "Partition literal, e.g. 10,2,1^3")->required();

  auto* chr = app.add_subcommand("char", "Character value chi^nu on a class");
  chr->add_option("--nu", cfg.nu_text, "Character label")->required();
  chr->add_option("--class", cfg.class_text, "Class label (cycle type)")->required();

  auto add_block_options = [&](CLI::App* sub) {
    sub->add_option("--e", cfg.e, "e")->required()->check(CLI::PositiveNumber);
    sub->add_option("--core", cfg.core_text, "e-core ('-' for empty)")->required();
    sub->add_option("--weight", cfg.weight, "e-weight")->required()->check(CLI::NonNegativeNumber);
  };
  auto* count = app.add_subcommand("count", "Number of block characters not vanishing on a class");
  add_block_options(count);
  count->add_option("--class", cfg.class_text, "Class label (cycle type)")->required();

  auto* extremal = app.add_subcommand("extremal", "e-class-regular class attaining count w+1");
  add_block_options(extremal);
  auto* block = app.add_subcommand("block", "List the partitions of a block");
  add_block_options(block);

  auto* table = app.add_subcommand("table", "Character table of S_n");
  table->add_option("-n,--n", cfg.table_n, "n")->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify
      ->add_option("claim", cfg.claim, "theorem1|dichotomy|lemma1|remark1|remark2|chibar|rowstructure")
      ->required()
      ->check(CLI::IsMember({"theorem1", "dichotomy", "lemma1", "remark1", "remark2", "chibar", "rowstructure"}));
  verify->add_option("--e", cfg.e_range, "Range of e, a..b inclusive (default 2..5)");
  verify->add_option("--max-n", cfg.max_n, "Largest n swept")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-size", cfg.max_size, "Largest partition size for lemma1")->check(CLI::NonNegativeNumber);

  std::vector<std::string> argv_storage{"gblock"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (cfg.format == "csv" && !table->parsed()) {
    err << "error: csv output is only available for 'table'\n";
    return kUsageError;
  }

  EngineOptions options;
  options.use_cache = !cfg.no_cache;
  CharacterEngine engine(options);
  try {
    if (core->parsed()) return cmd_core(cfg, out);
    if (chr->parsed()) return cmd_char(cfg, engine, out);
    if (count->parsed()) return cmd_count(cfg, engine, out);
    if (extremal->parsed()) return cmd_extremal(cfg, engine, out);
    if (block->parsed()) return cmd_block(cfg, out);
    if (table->parsed()) return cmd_table(cfg, engine, out);
    return cmd_verify(cfg, engine, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace gblock::cli
