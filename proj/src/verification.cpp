#include "signclass/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "signclass/classification.hpp"
#include "signclass/text_io.hpp"

namespace signclass {

std::string to_string(Group g) { return g == Group::sn ? "sn" : "an"; }

Group parse_group(std::string_view text) {
  if (text == "sn") return Group::sn;
  if (text == "an") return Group::an;
  throw std::invalid_argument("group must be 'sn' or 'an', got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Oracles

OracleVerdict oracle_sn_sign(const Partition& gamma, OracleOptions options) {
  if (gamma.size() < 1) throw std::invalid_argument("the S_n oracle needs |gamma| >= 1");
  OracleVerdict verdict{gamma, Group::sn, true, std::nullopt, 0, {}};
  MnEvaluator evaluator(gamma);
  std::size_t index = 0;
  for (const auto& beta : partitions_of(gamma.size())) {
    auto v = evaluator.value(beta);
    if (v < -1 || v > 1) {
      verdict.is_sign = false;
      ++verdict.violations;
      if (!verdict.witness) verdict.witness = Witness{index, to_string(beta), SplitLabel::none, QuadraticValue(v)};
      if (!options.exhaustive) break;
    }
    ++index;
  }
  verdict.cache = evaluator.stats();
  return verdict;
}

OracleVerdict oracle_an_sign(const Partition& gamma, OracleOptions options) {
  if (gamma.size() < 2) throw std::invalid_argument("the A_n oracle needs |gamma| >= 2");
  if (!is_even(gamma)) throw std::invalid_argument(to_string(gamma) + " is odd, so it is not an A_n cycle type");

  OracleVerdict verdict{gamma, Group::an, true, std::nullopt, 0, {}};
  const bool split = has_distinct_odd_parts(gamma);
  std::vector<AnClass> classes;
  if (split) {
    classes = {{gamma, true, SplitLabel::plus}, {gamma, true, SplitLabel::minus}};
  } else {
    classes = {{gamma, false, SplitLabel::none}};
  }

  MnEvaluator evaluator(gamma);
  const auto chars = an_irreducibles(gamma.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto sn_value = evaluator.value(chars[i].lambda);
    for (const auto& cls : classes) {
      auto v = an_char_value(chars[i], cls, sn_value);
      if (v.is_zero_or_unit()) continue;
      verdict.is_sign = false;
      ++verdict.violations;
      if (!verdict.witness) verdict.witness = Witness{i, to_string(chars[i]), cls.label, v};
      if (!options.exhaustive) {
        verdict.cache = evaluator.stats();
        return verdict;
      }
    }
  }
  verdict.cache = evaluator.stats();
  return verdict;
}

bool witness_is_valid(const OracleVerdict& verdict) {
  if (!verdict.witness) return false;
  const auto& w = *verdict.witness;
  const auto n = verdict.partition.size();
  QuadraticValue fresh;
  if (verdict.group == Group::sn) {
    const auto betas = all_partitions(n);
    if (w.character_index >= betas.size()) return false;
    fresh = QuadraticValue(mn_value(betas[w.character_index], verdict.partition));
  } else {
    const auto chars = an_irreducibles(n);
    if (w.character_index >= chars.size()) return false;
    AnClass cls{verdict.partition, w.class_label != SplitLabel::none, w.class_label};
    fresh = an_char_value(chars[w.character_index], cls);
  }
  return fresh == w.value && !fresh.is_zero_or_unit();
}

// ---------------------------------------------------------------------------
// Equivalence scans

namespace {

struct ScanOutcome {
  std::optional<Mismatch> mismatch;
  CacheStats cache;
};

ScanOutcome scan_one(const Partition& gamma, Group group, const OracleOptions& options) {
  ScanOutcome out;
  const auto verdict = group == Group::sn ? oracle_sn_sign(gamma, options) : oracle_an_sign(gamma, options);
  const bool closed = group == Group::sn ? is_sn_sign_partition_closed_form(gamma)
                                         : is_an_sign_partition_closed_form(gamma);
  out.cache = verdict.cache;
  if (closed != verdict.is_sign) out.mismatch = Mismatch{gamma, closed, verdict.is_sign, verdict.witness};
  return out;
}

VerificationReport run_scan(const std::vector<Partition>& gammas, Group group, const VerificationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ScanOutcome> outcomes(gammas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < gammas.size(); i = next++) {
      try {
        outcomes[i] = scan_one(gammas[i], group, options.oracle);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const auto workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(gammas.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  // Merge in input order so the report is independent of scheduling.
  VerificationReport report;
  report.group = group;
  report.scanned = gammas.size();
  for (auto& o : outcomes) {
    report.cache += o.cache;
    if (o.mismatch) report.mismatches.push_back(std::move(*o.mismatch));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

VerificationReport check_equivalence(Part n_lo, Part n_hi, Group group, const VerificationOptions& options) {
  if (n_lo < 2 || n_lo > n_hi) throw std::invalid_argument("need 2 <= n_lo <= n_hi");
  if (n_hi > options.scan_limit) {
    throw ResourceLimitError("n = " + std::to_string(n_hi) + " exceeds the scan limit " +
                             std::to_string(options.scan_limit));
  }
  std::vector<Partition> gammas;
  for (Part n = n_lo; n <= n_hi; ++n) {
    for (const auto& gamma : partitions_of(n)) {
      if (group == Group::sn || is_even(gamma)) gammas.push_back(gamma);
    }
  }
  auto report = run_scan(gammas, group, options);
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  return report;
}

VerificationReport check_partitions(const std::vector<Partition>& gammas, Group group,
                                    const VerificationOptions& options) {
  Part lo = 0;
  Part hi = 0;
  for (const auto& gamma : gammas) {
    if (gamma.size() > kSingleOracleLimit) {
      throw ResourceLimitError("|gamma| = " + std::to_string(gamma.size()) + " exceeds the single-oracle limit " +
                               std::to_string(kSingleOracleLimit));
    }
    lo = lo == 0 ? gamma.size() : std::min(lo, gamma.size());
    hi = std::max(hi, gamma.size());
  }
  auto report = run_scan(gammas, group, options);
  report.n_lo = lo;
  report.n_hi = hi;
  return report;
}

// ---------------------------------------------------------------------------
// Regression fixtures

namespace {

Partition with_ones(std::vector<Part> head, Part ones) {
  head.insert(head.end(), static_cast<std::size_t>(ones), 1);
  return Partition(std::move(head));
}

std::string fixture_id(const std::string& family, const Partition& lambda, const Partition& gamma) {
  return family + ": chi^(" + to_string(lambda) + ")_(" + to_string(gamma) + ")";
}

}  // namespace

std::vector<Fixture> regression_fixtures() {
  std::vector<Fixture> out;
  auto add = [&](const std::string& family, Partition lambda, Partition gamma, BigInt expected) {
    auto id = fixture_id(family, lambda, gamma);
    out.push_back({std::move(id), std::move(lambda), std::move(gamma), std::move(expected)});
  };

  add("staircase", {4, 4, 4, 3}, {5, 4, 3, 2, 1}, -2);
  add("staircase", {15, 2, 1, 1, 1, 1}, {6, 5, 4, 3, 2, 1}, 2);

  for (Part m = 2; m <= 6; ++m) {
    add("repeated-2", {2 * m - 1, 1, 1}, with_ones(std::vector<Part>(static_cast<std::size_t>(m), 2), 1), -m);
  }

  for (auto [a, a2] : {std::pair<Part, Part>{4, 9}, {4, 10}, {5, 11}}) {
    const Part top = a2 + 2 * a;
    add("hook-pair", with_ones({top, 3}, top - 4), {top - 1, a2, a, a - 1, 1}, a2 % 2 == 0 ? 2 : -2);
  }

  for (Part a = 7; a <= 9; ++a) {
    const Partition gamma{a, a - 1, 4, 1};
    add("a,a-1,4,1", with_ones({a + 4, 6}, a - 6), gamma, 0);
    add("a,a-1,4,1", with_ones({a, 4, 3}, a - 3), gamma, 0);
    add("a,a-1,4,1", {a + 2, a - 1, 3}, gamma, 0);
    add("a,a-1,4,1", with_ones({a + 2, 4, 3}, a - 5), gamma, 0);
  }

  for (Part a = 8; a <= 10; ++a) {
    const Partition gamma{a, a - 3, 2, 1, 1};
    add("a,a-3,2,1,1", {a + 1, a - 2, 1, 1}, gamma, 0);
    add("a,a-3,2,1,1", with_ones({a + 1, 5}, a - 5), gamma, 0);
  }

  for (Part a = 12; a <= 13; ++a) {
    const Partition gamma{a, a - 5, 3, 2, 1};
    add("a,a-5,3,2,1", with_ones({a + 1, a - 4}, 4), gamma, 0);
    add("a,a-5,3,2,1", with_ones({a + 1, 7}, a - 7), gamma, 0);
  }

  {
    const Part a = 6, b = 4;
    const Partition gamma{a, b, a - b + 1};
    add("a,b,a-b+1", with_ones({a + 1, b + 1}, a - b - 1), gamma, 0);
    add("a,b,a-b+1", with_ones({a + 1, a - b + 2}, b - 2), gamma, 0);
  }
  {
    const Part a = 7, b = 5;
    const Partition gamma{a, b, a - b - 1, 1};
    add("a,b,a-b-1,1", with_ones({a, b + 2}, a - b - 2), gamma, 0);
    add("a,b,a-b-1,1", with_ones({a, a - b + 1}, b - 1), gamma, 0);
  }

  // Small values the larger evaluations reduce to.
  add("reduction", {4, 1}, {4, 1}, 0);
  add("reduction", {3, 1, 1}, {4, 1}, 0);
  add("reduction", {2, 2}, {2, 1, 1}, 0);
  add("reduction", {4, 2}, {3, 2, 1}, 0);
  add("reduction", {3, 2, 1}, {3, 2, 1}, 0);
  add("reduction", {2, 2, 1, 1}, {3, 2, 1}, 0);
  add("reduction", {1, 1, 1, 1}, {2, 1, 1}, -1);
  add("reduction", {1, 1, 1, 1, 1, 1}, {3, 2, 1}, -1);
  return out;
}

RegressionResult run_regression(const std::vector<Fixture>& fixtures) {
  RegressionResult result;
  result.pass = !fixtures.empty();
  for (const auto& f : fixtures) {
    auto actual = mn_value(f.lambda, f.gamma);
    const bool ok = actual == f.expected;
    result.pass = result.pass && ok;
    result.results.push_back({f, std::move(actual), ok});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Difference characters

namespace {

void check_sn(Part n, DifferenceCharacterResult& out) {
  const auto table = sn_character_table(n);
  for (std::size_t c = 0; c < table.cols(); ++c) {
    bool sign = true;
    for (std::size_t i = 0; i < table.rows() && sign; ++i) sign = table(i, c) >= -1 && table(i, c) <= 1;
    if (!sign) continue;
    ++out.sign_classes;
    for (std::size_t g = 0; g < table.cols(); ++g) {
      if (g == c) continue;
      BigInt sum = 0;
      for (std::size_t i = 0; i < table.rows(); ++i) sum += table(i, c) * table(i, g);
      if (sum != 0) {
        out.pass = false;
        out.failures.push_back("S_" + std::to_string(n) + " class " + to_string(table.col_keys()[c]) + " at " +
                               to_string(table.col_keys()[g]) + ": " + sum.str());
      }
    }
  }
}

void check_an(Part n, DifferenceCharacterResult& out) {
  const auto table = an_character_table(n);
  for (std::size_t c = 0; c < table.cols(); ++c) {
    bool sign = true;
    for (std::size_t i = 0; i < table.rows() && sign; ++i) sign = table(i, c).is_zero_or_unit();
    if (!sign) continue;
    ++out.sign_classes;
    for (std::size_t g = 0; g < table.cols(); ++g) {
      if (g == c) continue;
      QuadraticSum sum;
      for (std::size_t i = 0; i < table.rows(); ++i) sum.add(*table(i, c).as_integer(), table(i, g));
      if (!sum.is_zero()) {
        out.pass = false;
        out.failures.push_back("A_" + std::to_string(n) + " class " + to_string(table.col_keys()[c]) + " at " +
                               to_string(table.col_keys()[g]) + ": " + sum.to_string());
      }
    }
  }
}

}  // namespace

DifferenceCharacterResult check_difference_character_property(Part n_max, Group group) {
  DifferenceCharacterResult out;
  for (Part n = 2; n <= n_max; ++n) {
    if (group == Group::sn) {
      check_sn(n, out);
    } else {
      check_an(n, out);
    }
  }
  return out;
}

}  // namespace signclass
