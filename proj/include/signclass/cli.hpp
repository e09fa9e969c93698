#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "signclass/partition.hpp"

namespace signclass::cli {

enum class OutputFormat { json, tsv, text };

struct Config {
  std::filesystem::path cache_dir;
  bool use_cache = true;
  Part table_limit = 22;
  Part scan_limit = 20;
  OutputFormat output = OutputFormat::json;
  unsigned workers = 1;
};

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // negative classification or verification mismatch
  kUsage = 2,
  kResourceLimit = 3,
  kInternal = 4,
};

/// $SIGNCLASS_CACHE_DIR, else the XDG / home cache location.
std::filesystem::path default_cache_dir();

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signclass::cli
