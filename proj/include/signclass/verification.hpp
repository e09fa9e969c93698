#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "signclass/an_characters.hpp"
#include "signclass/bigint.hpp"
#include "signclass/partition.hpp"
#include "signclass/quadratic.hpp"
#include "signclass/sn_characters.hpp"

namespace signclass {

enum class Group { sn, an };

std::string to_string(Group g);
/// "sn" / "an"; throws std::invalid_argument otherwise.
Group parse_group(std::string_view text);

inline constexpr Part kDefaultScanLimit = 20;
inline constexpr Part kSingleOracleLimit = 40;

/// A character value outside {0, 1, -1} on the class under test.
struct Witness {
  std::size_t character_index = 0;  // into all_partitions(n) or an_irreducibles(n)
  std::string character;            // canonical label, e.g. "2,1,1" or "2,2+"
  SplitLabel class_label = SplitLabel::none;
  QuadraticValue value;
};

struct OracleVerdict {
  Partition partition;
  Group group = Group::sn;
  bool is_sign = false;
  std::optional<Witness> witness;  // the first violation in canonical order
  std::size_t violations = 0;      // all violations when scanned exhaustively, else 0 or 1
  CacheStats cache;
};

struct OracleOptions {
  /// Keep scanning past the first witness to count every violation.
  bool exhaustive = false;
};

/// Brute force: scan chi^beta_gamma over all beta of n.
OracleVerdict oracle_sn_sign(const Partition& gamma, OracleOptions options = {});

/// Brute force over every irreducible of A_n on the class(es) of gamma.
/// Throws std::invalid_argument for odd gamma or |gamma| < 2.
OracleVerdict oracle_an_sign(const Partition& gamma, OracleOptions options = {});

/// Recomputes the witness value through a cold cache; true iff it matches
/// and lies outside {0, 1, -1}.
bool witness_is_valid(const OracleVerdict& verdict);

struct Mismatch {
  Partition partition;
  bool closed_form = false;
  bool oracle = false;
  std::optional<Witness> witness;
};

struct VerificationReport {
  Part n_lo = 0;
  Part n_hi = 0;
  Group group = Group::an;
  std::size_t scanned = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_ms = 0;
  CacheStats cache;
};

struct VerificationOptions {
  unsigned workers = 1;
  Part scan_limit = kDefaultScanLimit;
  OracleOptions oracle;
};

/// Closed form vs oracle for every gamma of n in [n_lo, n_hi] (even gamma
/// only for A_n). The mismatch list does not depend on the worker count.
/// Throws ResourceLimitError above the scan limit.
VerificationReport check_equivalence(Part n_lo, Part n_hi, Group group, const VerificationOptions& options = {});

/// Same comparison for an explicit list of cycle types, subject to the
/// single-partition oracle limit.
VerificationReport check_partitions(const std::vector<Partition>& gammas, Group group,
                                    const VerificationOptions& options = {});

// ---------------------------------------------------------------------------
// Regression fixtures

struct Fixture {
  std::string id;
  Partition lambda;
  Partition gamma;
  BigInt expected;
};

struct FixtureResult {
  Fixture fixture;
  BigInt actual;
  bool pass = false;
};

struct RegressionResult {
  std::vector<FixtureResult> results;
  bool pass = false;  // false when any fixture fails or none were run
};

/// Known exact values chi^lambda_gamma, mostly vanishing ones, that pin
/// the sign convention and the hook bookkeeping.
std::vector<Fixture> regression_fixtures();

RegressionResult run_regression(const std::vector<Fixture>& fixtures);
inline RegressionResult regression_suite() { return run_regression(regression_fixtures()); }

// ---------------------------------------------------------------------------
// Sign classes split Irr(G) into two characters differing only on C

struct DifferenceCharacterResult {
  bool pass = true;
  std::size_t sign_classes = 0;  // number of sign classes checked
  std::vector<std::string> failures;
};

/// For every sign class C of G_n (n from 2 to n_max) checks that the sum
/// of the characters positive on C and the sum of those negative on C
/// agree on every other class, i.e. sum_chi chi(C) chi(g) = 0 exactly.
DifferenceCharacterResult check_difference_character_property(Part n_max, Group group);

}  // namespace signclass
