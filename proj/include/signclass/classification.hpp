#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "signclass/partition.hpp"

namespace signclass {

/// Membership in Sign: some prefix gamma_1..gamma_s strictly dominates
/// everything after it, and the tail gamma_{s+1}.. is one of the listed
/// base shapes.
struct SignMembership {
  bool member = false;
  std::optional<std::size_t> split_index;  // smallest valid s
  std::optional<std::string> tail_family;  // e.g. "a,a-1,1"
};

/// Membership in the exceptional family Sign-bar.
struct SignBarMembership {
  bool member = false;
  std::optional<std::string> family;  // e.g. "a,a-1,4,1" or "2,2"
};

SignMembership in_sign_set(const Partition& gamma);
SignBarMembership in_sign_bar_set(const Partition& gamma);

/// Sign partitions of S_n are exactly the members of Sign.
bool is_sn_sign_partition_closed_form(const Partition& gamma);

/// gamma in (Sign u Sign-bar), even, and not all parts odd and distinct.
/// Throws std::invalid_argument for |gamma| < 2.
bool is_an_sign_partition_closed_form(const Partition& gamma);

struct ClassificationResult {
  Partition partition;
  bool in_sign = false;
  std::optional<std::size_t> sign_split_index;
  bool in_sign_bar = false;
  std::optional<std::string> sign_bar_family;
  bool is_even = false;
  bool distinct_odd = false;
  bool sn_sign_partition = false;
  bool an_sign_partition = false;
};

ClassificationResult classify(const Partition& gamma);

}  // namespace signclass
