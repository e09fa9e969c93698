#include "signclass/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <thread>

#include "signclass/an_characters.hpp"
#include "signclass/cache_file.hpp"
#include "signclass/classification.hpp"
#include "signclass/sn_characters.hpp"
#include "signclass/text_io.hpp"
#include "signclass/verification.hpp"

namespace signclass::cli {

using json = nlohmann::ordered_json;

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("SIGNCLASS_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "signclass";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "signclass";
  }
  return std::filesystem::temp_directory_path() / "signclass";
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Partition& p) {
  json arr = json::array();
  for (auto v : p) arr.push_back(v);
  return arr;
}

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json to_json(const QuadraticValue& v) {
  if (auto i = v.as_integer()) return to_json(*i);
  return v.to_string();
}

json to_json(const ClassificationResult& r) {
  json j;
  j["partition"] = to_json(r.partition);
  j["in_sign"] = r.in_sign;
  j["sign_split_index"] = r.sign_split_index ? json(*r.sign_split_index) : json(nullptr);
  j["in_sign_bar"] = r.in_sign_bar;
  j["sign_bar_family"] = r.sign_bar_family ? json(*r.sign_bar_family) : json(nullptr);
  j["is_even"] = r.is_even;
  j["distinct_odd"] = r.distinct_odd;
  j["sn_sign_partition"] = r.sn_sign_partition;
  j["an_sign_partition"] = r.an_sign_partition;
  return j;
}

std::string label_text(SplitLabel l) { return l == SplitLabel::none ? "" : std::string(1, to_char(l)); }

json to_json(const VerificationReport& report, bool timing) {
  json j;
  j["range"] = json::array({report.n_lo, report.n_hi});
  j["group"] = to_string(report.group);
  j["scanned"] = report.scanned;
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    json e;
    e["partition"] = to_json(m.partition);
    e["closed_form"] = m.closed_form;
    e["oracle"] = m.oracle;
    if (m.witness) {
      e["witness"] = {{"character_index", m.witness->character_index},
                      {"character", m.witness->character},
                      {"class_label", label_text(m.witness->class_label)},
                      {"value", to_json(m.witness->value)}};
    } else {
      e["witness"] = nullptr;
    }
    mismatches.push_back(std::move(e));
  }
  j["mismatches"] = std::move(mismatches);
  if (timing) j["elapsed_ms"] = report.elapsed_ms;
  j["cache"] = {{"hits", report.cache.hits}, {"misses", report.cache.misses}};
  return j;
}

Partition parse_arg(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SplitLabel parse_label(const std::string& text) {
  if (text.empty()) return SplitLabel::none;
  if (text == "+") return SplitLabel::plus;
  if (text == "-") return SplitLabel::minus;
  throw UsageError("split label must be '+' or '-', got '" + text + "'");
}

// S_n evaluation backed by the on-disk cache for one gamma.
class CachedColumn {
 public:
  CachedColumn(const Config& config, const Partition& gamma) : config_(config), evaluator_(gamma) {
    if (!config_.use_cache || gamma.empty()) return;
    path_ = cache_batch_path(config_.cache_dir, gamma);
    try {
      if (auto batch = load_cache_batch(path_); batch && batch->gamma == gamma) {
        for (auto& [lambda, v] : batch->records) evaluator_.seed(lambda, std::move(v));
        loaded_ = batch->records.size();
      }
    } catch (const std::exception&) {
      // Unreadable or stale cache: recompute and overwrite.
    }
  }

  BigInt value(const Partition& lambda) { return evaluator_.value(lambda); }

  ~CachedColumn() {
    if (path_.empty()) return;
    auto values = evaluator_.top_level_values();
    if (values.size() == loaded_) return;
    try {
      save_cache_batch(path_, {evaluator_.gamma().size(), evaluator_.gamma(), std::move(values)});
    } catch (const std::exception&) {
      // The cache only affects timing.
    }
  }

 private:
  const Config& config_;
  MnEvaluator evaluator_;
  std::filesystem::path path_;
  std::size_t loaded_ = 0;
};

int cmd_char(const Config& config, const std::string& lambda_text, const std::string& gamma_text, std::ostream& out) {
  const auto lambda = parse_arg(lambda_text);
  const auto gamma = parse_arg(gamma_text);
  if (lambda.size() != gamma.size()) {
    throw UsageError("size mismatch: |lambda| = " + std::to_string(lambda.size()) +
                     ", |gamma| = " + std::to_string(gamma.size()));
  }
  CachedColumn column(config, gamma);
  out << column.value(lambda) << '\n';
  return kSuccess;
}

int cmd_anchar(const std::string& lambda_text, const std::string& chi_text, const std::string& gamma_text,
               const std::string& class_text, std::ostream& out) {
  const auto lambda = parse_arg(lambda_text);
  const auto gamma = parse_arg(gamma_text);
  if (lambda.size() != gamma.size()) throw UsageError("size mismatch between --lambda and --gamma");
  if (gamma.size() < 2) throw UsageError("A_n needs n >= 2");
  if (!is_even(gamma)) throw UsageError(to_string(gamma) + " is odd, so it is not an A_n cycle type");

  const auto chi_label = parse_label(chi_text);
  AnIrreducible chi;
  if (is_self_conjugate(lambda)) {
    if (chi_label == SplitLabel::none) throw UsageError("self-conjugate lambda needs --chi + or --chi -");
    chi = AnIrreducible::split_constituent(lambda, chi_label);
  } else {
    if (chi_label != SplitLabel::none) throw UsageError("--chi only applies to self-conjugate lambda");
    chi = AnIrreducible::restricted(lambda);
  }

  const auto class_label = parse_label(class_text);
  const bool split = has_distinct_odd_parts(gamma);
  if (split && class_label == SplitLabel::none) throw UsageError("split class needs --class + or --class -");
  if (!split && class_label != SplitLabel::none) throw UsageError("--class only applies to split classes");

  out << an_char_value(chi, AnClass{gamma, split, class_label}).to_string() << '\n';
  return kSuccess;
}

int cmd_classify(const Config& config, const std::string& gamma_text, std::ostream& out) {
  const auto result = classify(parse_arg(gamma_text));
  if (config.output == OutputFormat::json) {
    out << to_json(result).dump(2) << '\n';
  } else {
    const auto j = to_json(result);
    for (const auto& [key, value] : j.items()) out << key << '\t' << value.dump() << '\n';
  }
  return result.an_sign_partition ? kSuccess : kNegative;
}

template <class Table, class RowName, class ColName, class Cell>
void emit_table(const Config& config, const Table& table, RowName row_name, ColName col_name, Cell cell,
                std::ostream& out) {
  if (config.output == OutputFormat::json) {
    json j;
    for (std::size_t i = 0; i < table.rows(); ++i) {
      json row;
      for (std::size_t k = 0; k < table.cols(); ++k) row[col_name(table.col_keys()[k])] = to_json(table(i, k));
      j[row_name(table.row_keys()[i])] = std::move(row);
    }
    out << j.dump(2) << '\n';
    return;
  }
  const char sep = config.output == OutputFormat::tsv ? '\t' : ' ';
  out << "chi\\class";
  for (const auto& c : table.col_keys()) out << sep << col_name(c);
  out << '\n';
  for (std::size_t i = 0; i < table.rows(); ++i) {
    out << row_name(table.row_keys()[i]);
    for (std::size_t k = 0; k < table.cols(); ++k) out << sep << cell(table(i, k));
    out << '\n';
  }
}

int cmd_table(const Config& config, Part n, Group group, std::ostream& out) {
  auto name = [](const auto& key) { return to_string(key); };
  if (group == Group::sn) {
    if (n < 1) throw UsageError("--n must be at least 1");
    if (n > config.table_limit) {
      throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the table limit " +
                               std::to_string(config.table_limit));
    }
    auto parts = all_partitions(n);
    SnCharacterTable table(parts, parts);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      CachedColumn column(config, parts[j]);
      for (std::size_t i = 0; i < parts.size(); ++i) table(i, j) = column.value(parts[i]);
    }
    emit_table(config, table, name, name, [](const BigInt& v) { return v.str(); }, out);
  } else {
    if (n < 2) throw UsageError("--n must be at least 2 for A_n");
    const auto table = an_character_table(n, config.table_limit);
    emit_table(config, table, name, name, [](const QuadraticValue& v) { return v.to_string(); }, out);
  }
  return kSuccess;
}

int cmd_verify(const Config& config, Part from, Part to, Group group, const std::vector<std::string>& gamma_texts,
               bool exhaustive, bool timing, std::ostream& out, std::ostream& err) {
  VerificationOptions options;
  options.workers = config.workers;
  options.scan_limit = config.scan_limit;
  options.oracle.exhaustive = exhaustive;

  VerificationReport report;
  if (!gamma_texts.empty()) {
    std::vector<Partition> gammas;
    for (const auto& t : gamma_texts) {
      auto g = parse_arg(t);
      if (g.size() < 2) throw UsageError("verification needs |gamma| >= 2");
      if (group == Group::an && !is_even(g)) throw UsageError(t + " is odd, so it is not an A_n cycle type");
      gammas.push_back(std::move(g));
    }
    report = check_partitions(gammas, group, options);
  } else {
    if (from < 2 || from > to) throw UsageError("need 2 <= --from <= --to");
    report = check_equivalence(from, to, group, options);
  }

  if (config.output == OutputFormat::json) {
    out << to_json(report, timing).dump(2) << '\n';
  } else {
    out << "group: " << to_string(report.group) << "\nrange: " << report.n_lo << ".." << report.n_hi
        << "\nscanned: " << report.scanned << "\nmismatches: ";
    if (report.mismatches.empty()) out << "[]\n";
    for (const auto& m : report.mismatches) {
      out << "\n  " << to_string(m.partition) << " closed_form=" << m.closed_form << " oracle=" << m.oracle;
    }
    if (!report.mismatches.empty()) out << '\n';
  }
  err << "verify: " << report.scanned << " partitions in " << static_cast<long long>(report.elapsed_ms) << " ms\n";
  return report.mismatches.empty() ? kSuccess : kNegative;
}

int cmd_regress(const Config& config, std::ostream& out) {
  const auto result = regression_suite();
  if (config.output == OutputFormat::json) {
    json j;
    j["pass"] = result.pass;
    json fixtures = json::array();
    for (const auto& r : result.results) {
      fixtures.push_back({{"id", r.fixture.id},
                          {"expected", to_json(r.fixture.expected)},
                          {"actual", to_json(r.actual)},
                          {"pass", r.pass}});
    }
    j["fixtures"] = std::move(fixtures);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : result.results) {
      out << (r.pass ? "pass  " : "FAIL  ") << r.fixture.id << " = " << r.actual;
      if (!r.pass) out << " (expected " << r.fixture.expected << ')';
      out << '\n';
    }
    out << result.results.size() << " fixtures, " << (result.pass ? "all pass" : "FAILED") << '\n';
  }
  return result.pass ? kSuccess : kNegative;
}

int cmd_partitions(const Config& config, Part n, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be non-negative");
  if (config.output == OutputFormat::json) {
    json arr = json::array();
    for (const auto& p : partitions_of(n)) arr.push_back(to_json(p));
    out << arr.dump() << '\n';
  } else {
    for (const auto& p : partitions_of(n)) out << to_string(p) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characters of symmetric and alternating groups and their sign conjugacy classes",
               "signclass"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_dir;
  std::string format = "json";
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir, "Directory for persisted character values");
  app.add_flag("--no-cache", no_cache, "Do not read or write the on-disk cache");
  app.add_option("--table-limit", config.table_limit, "Largest n for full character tables");
  app.add_option("--scan-limit", config.scan_limit, "Largest n for equivalence scans");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));

  std::string lambda_text, gamma_text, chi_text, class_text, group_text = "an";
  std::vector<std::string> gamma_list;
  Part n = 0, from = 2, to = 12;
  unsigned workers = 0;
  bool exhaustive = false, timing = false;

  auto* char_cmd = app.add_subcommand("char", "Evaluate chi^lambda_gamma of S_n");
  char_cmd->add_option("--lambda", lambda_text, "Character, e.g. 4,4,4,3")->required();
  char_cmd->add_option("--gamma", gamma_text, "Cycle type, e.g. 5,4,3,2,1")->required();

  auto* anchar_cmd = app.add_subcommand("anchar", "Evaluate an irreducible character of A_n");
  anchar_cmd->add_option("--lambda", lambda_text, "Character label")->required();
  anchar_cmd->add_option("--chi", chi_text, "+ or - for self-conjugate lambda");
  anchar_cmd->add_option("--gamma", gamma_text, "Even cycle type")->required();
  anchar_cmd->add_option("--class", class_text, "+ or - for split classes");

  auto* classify_cmd = app.add_subcommand("classify", "Closed-form sign classification of a cycle type");
  classify_cmd->add_option("--gamma", gamma_text, "Cycle type")->required();

  auto* table_cmd = app.add_subcommand("table", "Print a full character table");
  table_cmd->add_option("--n", n, "Degree")->required();
  table_cmd->add_option("--group", group_text, "sn or an")->check(CLI::IsMember({"sn", "an"}));

  auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form against brute force");
  verify_cmd->add_option("--from", from, "Smallest n");
  verify_cmd->add_option("--to", to, "Largest n");
  verify_cmd->add_option("--gamma", gamma_list, "Check only these cycle types (repeatable)");
  verify_cmd->add_option("--group", group_text, "sn or an")->check(CLI::IsMember({"sn", "an"}));
  verify_cmd->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");
  verify_cmd->add_flag("--exhaustive", exhaustive, "Scan every character instead of stopping at a witness");
  verify_cmd->add_flag("--timing", timing, "Include elapsed_ms in the report");

  app.add_subcommand("regress", "Check the known-value regression fixtures");

  auto* partitions_cmd = app.add_subcommand("partitions", "List the partitions of n");
  partitions_cmd->add_option("--n", n, "Number to partition")->required();

  std::vector<const char*> argv{"signclass"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  config.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
  config.use_cache = !no_cache;
  config.output = format == "tsv" ? OutputFormat::tsv : format == "text" ? OutputFormat::text : OutputFormat::json;
  if (workers > 0) config.workers = workers;

  try {
    const auto group = parse_group(group_text);
    if (*char_cmd) return cmd_char(config, lambda_text, gamma_text, out);
    if (*anchar_cmd) return cmd_anchar(lambda_text, chi_text, gamma_text, class_text, out);
    if (*classify_cmd) return cmd_classify(config, gamma_text, out);
    if (*table_cmd) return cmd_table(config, n, group, out);
    if (*verify_cmd) return cmd_verify(config, from, to, group, gamma_list, exhaustive, timing, out, err);
    if (*partitions_cmd) return cmd_partitions(config, n, out);
    return cmd_regress(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "refused: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace signclass::cli
