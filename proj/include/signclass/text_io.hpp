#pragma once

#include <string>
#include <string_view>

#include "signclass/partition.hpp"

namespace signclass {

/// Canonical text form: comma-separated parts, e.g. "5,4,3,2,1".
/// The empty partition renders as "".
std::string to_string(const Partition& p);

/// Accepts the canonical form plus exponent shorthand, so "3,2^4,1" is
/// (3,2,2,2,2,1). Throws std::invalid_argument on anything else.
Partition parse_partition(std::string_view text);

}  // namespace signclass
