#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace signclass {

// Character values and group orders outgrow any machine word quickly
// (the degree of chi^lambda is the value at the identity class).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace signclass
