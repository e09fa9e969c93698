// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Every comparison is exact, so the only tolerances are the time budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "signclass/an_characters.hpp"
#include "signclass/classification.hpp"
#include "signclass/cli.hpp"
#include "signclass/sn_characters.hpp"
#include "signclass/text_io.hpp"
#include "signclass/verification.hpp"

using namespace signclass;
using Clock = std::chrono::steady_clock;

namespace {

constexpr auto kScanBudget = std::chrono::minutes(10);
constexpr auto kTypoBudget = std::chrono::minutes(2);
constexpr unsigned kScanWorkers = 4;
constexpr Part kScanMax = 18;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome equivalence(Group group) {
  const auto start = Clock::now();
  const auto report = check_equivalence(2, kScanMax, group, {.workers = kScanWorkers});
  const auto elapsed = Clock::now() - start;
  std::ostringstream os;
  os << report.scanned << " partitions, " << report.mismatches.size() << " mismatches, " << seconds_since(start)
     << " s";
  for (const auto& m : report.mismatches) os << "; mismatch at " << to_string(m.partition);
  return {report.mismatches.empty() && elapsed < kScanBudget, os.str()};
}

Outcome intro_examples() {
  const bool three = oracle_sn_sign(Partition{3}).is_sign && !oracle_an_sign(Partition{3}).is_sign &&
                     is_sn_sign_partition_closed_form(Partition{3}) &&
                     !is_an_sign_partition_closed_form(Partition{3});
  const bool two_two = !oracle_sn_sign(Partition{2, 2}).is_sign && oracle_an_sign(Partition{2, 2}).is_sign &&
                       !is_sn_sign_partition_closed_form(Partition{2, 2}) &&
                       is_an_sign_partition_closed_form(Partition{2, 2});
  return {three && two_two, std::string("(3): ") + (three ? "ok" : "wrong") + ", (2,2): " + (two_two ? "ok" : "wrong")};
}

Outcome regression() {
  const auto r = regression_suite();
  std::size_t failed = 0;
  std::string first_failure;
  for (const auto& f : r.results) {
    if (f.pass) continue;
    if (failed++ == 0) first_failure = "; first failure " + f.fixture.id;
  }
  const bool enough = r.results.size() >= 20;
  return {r.pass && enough,
          std::to_string(r.results.size()) + " fixtures, " + std::to_string(failed) + " failed" + first_failure};
}

// For a self-conjugate lambda, every value of chi^{lambda,+} off the
// diagonal-hook class gamma is chi^lambda/2. Row norm |A_n| then fixes
// |x|^2 + |x'|^2 on C_{gamma,+-}; with x + x' = eps this pins
// x = (eps + y)/2 with |y|^2 = gamma_1 ... gamma_r.
bool split_values_pinned(const Partition& lambda, std::string& why) {
  const auto n = lambda.size();
  const auto hooks = diagonal_hooks(lambda);
  const Partition gamma(std::vector<Part>(hooks.begin(), hooks.end()));
  const BigInt order = factorial(n) / 2;

  BigInt rest4 = 0;  // 4 * sum over other classes of |C| |chi/2|^2
  for (const auto& cls : an_classes(n)) {
    if (cls.gamma == gamma) continue;
    const auto v = mn_value(lambda, cls.gamma);
    rest4 += an_class_size(cls) * v * v;
  }
  const AnClass c_plus{gamma, true, SplitLabel::plus};
  const auto size = an_class_size(c_plus);
  // 4 (|x|^2 + |x'|^2) * |C| = 4 order - rest4 and 4(|x|^2 + |x'|^2) = 2 (1 + |y|^2).
  const BigInt num = 4 * order - rest4;
  if (num % (2 * size) != 0) {
    why = "non-integral pinned norm for " + to_string(lambda);
    return false;
  }
  const BigInt y_norm = num / (2 * size) - 1;
  BigInt product = 1;
  for (auto p : gamma) product *= p;
  if (y_norm != product) {
    why = "pinned |y|^2 = " + y_norm.str() + " for " + to_string(lambda);
    return false;
  }

  const int eps = epsilon(lambda);
  const auto chi = AnIrreducible::split_constituent(lambda, SplitLabel::plus);
  const auto x = an_char_value(chi, c_plus);
  const auto x_other = an_char_value(chi, {gamma, true, SplitLabel::minus});
  const bool ok = x.a() == eps && x.b() * x.b() * boost::multiprecision::abs(x.radicand()) == product &&
                  (x.radicand() < 0) == (eps < 0) && x + x_other == QuadraticValue(eps);
  if (!ok) why = "value " + x.to_string() + " for " + to_string(lambda);
  return ok;
}

Outcome split_formula() {
  std::size_t checked = 0;
  std::string why;
  for (Part n = 1; n <= 12; ++n) {
    if (n >= 2 && !an_rows_orthonormal(an_character_table(n))) return {false, "A_" + std::to_string(n) + " rows"};
    for (const auto& lambda : partitions_of(n)) {
      if (!is_self_conjugate(lambda) || n < 2) continue;
      if (!split_values_pinned(lambda, why)) return {false, why};
      ++checked;
    }
  }
  const auto a4 = an_char_value(AnIrreducible::split_constituent(Partition{2, 2}, SplitLabel::plus),
                                {Partition{3, 1}, true, SplitLabel::plus});
  const auto a4m = an_char_value(AnIrreducible::split_constituent(Partition{2, 2}, SplitLabel::plus),
                                 {Partition{3, 1}, true, SplitLabel::minus});
  const auto a5 = an_char_value(AnIrreducible::split_constituent(Partition{3, 1, 1}, SplitLabel::plus),
                                {Partition{5}, true, SplitLabel::plus});
  const auto a5m = an_char_value(AnIrreducible::split_constituent(Partition{3, 1, 1}, SplitLabel::plus),
                                 {Partition{5}, true, SplitLabel::minus});
  const bool small = a4 == QuadraticValue::from_parts(-1, 1, -3) && a4m == QuadraticValue::from_parts(-1, -1, -3) &&
                     a5 == QuadraticValue::from_parts(1, 1, 5) && a5m == QuadraticValue::from_parts(1, -1, 5);
  return {small, std::to_string(checked) + " self-conjugate partitions; A_4 " + a4.to_string() + ", " +
                     a4m.to_string() + "; A_5 " + a5.to_string() + ", " + a5m.to_string()};
}

Outcome typo_repair() {
  const auto start = Clock::now();
  const auto v = oracle_an_sign(Partition{11, 6, 3, 2, 1});
  const auto elapsed = Clock::now() - start;
  const bool neighbours = oracle_an_sign(Partition{9, 4, 3, 2, 1}).is_sign &&
                          oracle_an_sign(Partition{10, 5, 3, 2, 1}).is_sign &&
                          !is_an_sign_partition_closed_form(Partition{11, 6, 3, 2, 1});
  std::ostringstream os;
  os << "(11,6,3,2,1) " << (v.is_sign ? "accepted" : "rejected");
  if (v.witness) os << " by " << v.witness->character << " = " << v.witness->value.to_string();
  os << " in " << seconds_since(start) << " s; (9,4,3,2,1) and (10,5,3,2,1) " << (neighbours ? "accepted" : "WRONG");
  return {!v.is_sign && witness_is_valid(v) && neighbours && elapsed < kTypoBudget, os.str()};
}

Outcome property_suites() {
  std::vector<std::string> failed;
  for (Part n = 1; n <= 12; ++n) {
    const auto t = sn_character_table(n);
    for (std::size_t g = 0; g < t.cols(); ++g) {
      for (std::size_t d = 0; d < t.cols(); ++d) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < t.rows(); ++i) sum += t(i, g) * t(i, d);
        if (sum != (g == d ? centralizer_order(t.col_keys()[g]) : BigInt(0))) {
          failed.push_back("orthogonality n=" + std::to_string(n));
          g = t.cols();
          break;
        }
      }
    }
    if (!conjugate_twist_check(n)) failed.push_back("twist n=" + std::to_string(n));
  }
  for (Part n = 2; n <= 14; ++n) {
    try {
      an_character_table(n);
    } catch (const std::logic_error& e) {
      failed.push_back(std::string("halving: ") + e.what());
    }
  }
  for (Group g : {Group::sn, Group::an}) {
    const auto r = check_difference_character_property(10, g);
    if (!r.pass) failed.push_back("difference " + to_string(g) + ": " + r.failures.front());
  }
  std::string detail = "orthogonality/twist n<=12, halving n<=14, difference n<=10";
  for (const auto& f : failed) detail += "; " + f;
  return {failed.empty(), detail};
}

Outcome determinism() {
  std::vector<std::string> outputs;
  for (const char* w : {"1", "4", "8"}) {
    for (const char* group : {"an", "sn"}) {
      std::ostringstream out, err;
      const int code = cli::run({"--no-cache", "verify", "--from", "2", "--to", std::to_string(kScanMax), "--group",
                                 group, "--workers", w},
                                out, err);
      outputs.push_back(std::to_string(code) + out.str());
    }
  }
  bool same = true;
  for (std::size_t i = 2; i < outputs.size(); ++i) same = same && outputs[i] == outputs[i % 2];
  return {same, std::string("verify 2..") + std::to_string(kScanMax) + " an/sn with workers 1, 4, 8: " +
                    (same ? "byte-identical" : "outputs differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A_n closed form equals oracle, 2 <= n <= 18", [] { return equivalence(Group::an); }},
      {"S_n closed form equals oracle, 2 <= n <= 18", [] { return equivalence(Group::sn); }},
      {"(3) and (2,2) classify as stated", intro_examples},
      {"regression fixtures reproduce exactly", regression},
      {"split values pinned by row orthogonality, n <= 12", split_formula},
      {"(11,6,3,2,1) rejected by the A_n oracle", typo_repair},
      {"property suites", property_suites},
      {"verify output independent of worker count", determinism},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << o.detail << "]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
