#include "test_support.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "signclass/cli.hpp"

using namespace signclass;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("signclass-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

Result run_in(const fs::path& cache, std::vector<std::string> args) {
  args.insert(args.begin(), {"--cache-dir", cache.string()});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("char") {
  TempDir dir;
  auto r = run_in(dir.path(), {"char", "--lambda", "4,4,4,3", "--gamma", "5,4,3,2,1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "-2\n");
  r = run_in(dir.path(), {"char", "--lambda", "15,2,1,1,1,1", "--gamma", "6,5,4,3,2,1"});
  CHECK(r.out == "2\n");
  r = run_in(dir.path(), {"char", "--lambda", "3", "--gamma", "2,1"});
  CHECK(r.out == "1\n");
  r = run_in(dir.path(), {"char", "--lambda", "3", "--gamma", "2,2"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("size mismatch") != std::string::npos);
  r = run_in(dir.path(), {"char", "--lambda", "3,x", "--gamma", "2,2"});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("char results persist and the cache is transparent") {
  TempDir dir;
  const std::vector<std::string> args{"char", "--lambda", "4,4,4,3", "--gamma", "5,4,3,2,1"};
  const auto cold = run_in(dir.path(), args);
  CHECK(fs::exists(dir.path() / "sn" / "n15" / "5,4,3,2,1.bin"));
  const auto warm = run_in(dir.path(), args);
  CHECK(warm.out == cold.out);

  // A corrupt file is ignored and rewritten.
  {
    std::ofstream bad(dir.path() / "sn" / "n15" / "5,4,3,2,1.bin", std::ios::trunc);
    bad << "garbage";
  }
  CHECK(run_in(dir.path(), args).out == cold.out);

  fs::remove_all(dir.path());
  CHECK(run_in(dir.path(), args).out == cold.out);

  std::vector<std::string> no_cache = args;
  no_cache.insert(no_cache.begin(), "--no-cache");
  TempDir other;
  CHECK(run_in(other.path(), no_cache).out == cold.out);
  CHECK_FALSE(fs::exists(other.path() / "sn"));
}

TEST_CASE("table output is unchanged by deleting the cache") {
  TempDir dir;
  const std::vector<std::string> args{"--format", "tsv", "table", "--n", "7", "--group", "sn"};
  const auto first = run_in(dir.path(), args);
  REQUIRE(first.code == cli::kSuccess);
  const auto second = run_in(dir.path(), args);
  fs::remove_all(dir.path());
  const auto third = run_in(dir.path(), args);
  CHECK(first.out == second.out);
  CHECK(first.out == third.out);
}

TEST_CASE("anchar") {
  TempDir dir;
  auto r = run_in(dir.path(), {"anchar", "--lambda", "2,2", "--chi", "+", "--gamma", "3,1", "--class", "+"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "(-1+1*sqrt(-3))/2\n");
  r = run_in(dir.path(), {"anchar", "--lambda", "2,2", "--chi", "+", "--gamma", "2,2"});
  CHECK(r.out == "1\n");
  r = run_in(dir.path(), {"anchar", "--lambda", "4,1", "--gamma", "2,2,1"});
  CHECK(r.out == "0\n");
  r = run_in(dir.path(), {"anchar", "--lambda", "3,1,1", "--chi", "-", "--gamma", "5", "--class", "+"});
  CHECK(r.out == "(1-1*sqrt(5))/2\n");

  CHECK(run_in(dir.path(), {"anchar", "--lambda", "2,2", "--gamma", "2,2"}).code == cli::kUsage);
  CHECK(run_in(dir.path(), {"anchar", "--lambda", "3,1", "--chi", "+", "--gamma", "2,2"}).code == cli::kUsage);
  CHECK(run_in(dir.path(), {"anchar", "--lambda", "2,2", "--chi", "+", "--gamma", "3,1"}).code == cli::kUsage);
  CHECK(run_in(dir.path(), {"anchar", "--lambda", "3,1", "--gamma", "2,2", "--class", "+"}).code == cli::kUsage);
  CHECK(run_in(dir.path(), {"anchar", "--lambda", "3,1", "--gamma", "2,1,1"}).code == cli::kUsage);
  CHECK(run_in(dir.path(), {"anchar", "--lambda", "2,2", "--chi", "x", "--gamma", "2,2"}).code == cli::kUsage);
}

TEST_CASE("classify") {
  TempDir dir;
  auto r = run_in(dir.path(), {"classify", "--gamma", "2,2"});
  CHECK(r.code == cli::kSuccess);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["an_sign_partition"] == true);
  CHECK(j["in_sign"] == false);

  r = run_in(dir.path(), {"classify", "--gamma", "3"});
  CHECK(r.code == cli::kNegative);
  j = nlohmann::json::parse(r.out);
  CHECK(j["an_sign_partition"] == false);
  CHECK(j["distinct_odd"] == true);

  r = run_in(dir.path(), {"classify", "--gamma", "6,5,4,1"});
  CHECK(r.code == cli::kSuccess);
  j = nlohmann::json::parse(r.out);
  CHECK(j["sign_bar_family"] == "a,a-1,4,1");
  CHECK(j["partition"] == nlohmann::json::array({6, 5, 4, 1}));

  // Key order is fixed.
  CHECK(r.out.find("\"partition\"") < r.out.find("\"an_sign_partition\""));
}

TEST_CASE("table") {
  TempDir dir;
  auto r = run_in(dir.path(), {"--format", "tsv", "table", "--n", "4", "--group", "an"});
  CHECK(r.code == cli::kSuccess);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "chi\\class\t3,1+\t3,1-\t2,2\t1,1,1,1");
  CHECK(rows[1] == "4\t1\t1\t1\t1");
  CHECK(rows[2] == "3,1\t0\t0\t-1\t3");
  CHECK(rows[3] == "2,2+\t(-1+1*sqrt(-3))/2\t(-1-1*sqrt(-3))/2\t1\t1");
  CHECK(rows[4] == "2,2-\t(-1-1*sqrt(-3))/2\t(-1+1*sqrt(-3))/2\t1\t1");

  r = run_in(dir.path(), {"table", "--n", "3", "--group", "sn"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["2,1"]["3"] == -1);
  CHECK(j["1,1,1"]["2,1"] == -1);

  r = run_in(dir.path(), {"--table-limit", "5", "table", "--n", "6", "--group", "sn"});
  CHECK(r.code == cli::kResourceLimit);
  CHECK(run_in(dir.path(), {"table", "--n", "23", "--group", "an"}).code == cli::kResourceLimit);
  CHECK(run_in(dir.path(), {"table", "--n", "4", "--group", "gl"}).code == cli::kUsage);
}

TEST_CASE("verify") {
  TempDir dir;
  auto r = run_in(dir.path(), {"verify", "--from", "2", "--to", "12", "--group", "an", "--workers", "4"});
  CHECK(r.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mismatches"].empty());
  CHECK(j["group"] == "an");
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(r.err.find("verify: ") == 0);

  r = run_in(dir.path(), {"verify", "--from", "2", "--to", "6", "--group", "sn", "--timing"});
  CHECK(nlohmann::json::parse(r.out).contains("elapsed_ms"));

  r = run_in(dir.path(), {"verify", "--group", "an", "--gamma", "2,2", "--gamma", "6,5,4,1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(nlohmann::json::parse(r.out)["scanned"] == 2);

  CHECK(run_in(dir.path(), {"verify", "--from", "2", "--to", "21"}).code == cli::kResourceLimit);
  CHECK(run_in(dir.path(), {"--scan-limit", "8", "verify", "--to", "9"}).code == cli::kResourceLimit);
  CHECK(run_in(dir.path(), {"verify", "--group", "an", "--gamma", "2,1"}).code == cli::kUsage);
  CHECK(run_in(dir.path(), {"verify", "--from", "5", "--to", "3"}).code == cli::kUsage);
}

TEST_CASE("verify output is byte-identical across worker counts") {
  TempDir dir;
  const auto base = run_in(dir.path(), {"verify", "--from", "2", "--to", "13", "--group", "an", "--workers", "1"});
  for (const char* w : {"4", "8"}) {
    const auto r = run_in(dir.path(), {"verify", "--from", "2", "--to", "13", "--group", "an", "--workers", w});
    CHECK(r.out == base.out);
  }
}

TEST_CASE("regress and partitions") {
  TempDir dir;
  auto r = run_in(dir.path(), {"regress"});
  CHECK(r.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["fixtures"].size() >= 20);
  for (const auto& f : j["fixtures"]) CHECK(f["pass"] == true);

  r = run_in(dir.path(), {"--format", "text", "partitions", "--n", "4"});
  CHECK(r.out == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
}

TEST_CASE("usage errors") {
  std::ostringstream out, err;
  CHECK(cli::run({}, out, err) == cli::kUsage);
  CHECK(cli::run({"frobnicate"}, out, err) == cli::kUsage);
  CHECK(cli::run({"char", "--lambda", "3"}, out, err) == cli::kUsage);
  CHECK(cli::run({"--format", "xml", "regress"}, out, err) == cli::kUsage);
  CHECK(cli::run({"--help"}, out, err) == cli::kSuccess);
}

TEST_CASE("cache directory from the environment") {
  TempDir dir;
  ::setenv("SIGNCLASS_CACHE_DIR", dir.path().c_str(), 1);
  CHECK(cli::default_cache_dir() == dir.path());
  std::ostringstream out, err;
  CHECK(cli::run({"char", "--lambda", "2,1", "--gamma", "2,1"}, out, err) == cli::kSuccess);
  CHECK(out.str() == "0\n");
  CHECK(fs::exists(dir.path() / "sn" / "n3" / "2,1.bin"));
  ::unsetenv("SIGNCLASS_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg-probe", 1);
  CHECK(cli::default_cache_dir() == fs::path("/tmp/xdg-probe/signclass"));
  ::unsetenv("XDG_CACHE_HOME");
}
