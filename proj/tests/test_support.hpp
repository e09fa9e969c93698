#pragma once

#include <doctest.h>

#include "signclass/partition.hpp"
#include "signclass/quadratic.hpp"
#include "signclass/text_io.hpp"

namespace doctest {

template <>
struct StringMaker<signclass::Partition> {
  static String convert(const signclass::Partition& p) { return ("(" + signclass::to_string(p) + ")").c_str(); }
};

template <>
struct StringMaker<signclass::BigInt> {
  static String convert(const signclass::BigInt& v) { return v.str().c_str(); }
};

template <>
struct StringMaker<signclass::QuadraticValue> {
  static String convert(const signclass::QuadraticValue& v) { return v.to_string().c_str(); }
};

}  // namespace doctest
