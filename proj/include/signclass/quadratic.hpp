#pragma once

#include <map>
#include <optional>
#include <string>

#include "signclass/bigint.hpp"

namespace signclass {

/// An exact value (a + b*sqrt(R)) / 2 with integers a, b, R.
///
/// R may be negative (an imaginary surd). When b == 0 the value is a
/// rational integer, so a is even and R is normalized to 0. Values with
/// different non-zero radicands are never combined: equality is
/// structural on (a, b, R), and adding across radicands throws
/// std::domain_error. The radicand is kept unreduced, so equality across
/// radicands (sqrt(8) vs 2*sqrt(2)) is out of scope.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(long long v) : a_(BigInt(v) * 2) {}  // NOLINT: integers convert implicitly
  QuadraticValue(const BigInt& v) : a_(v * 2) {}      // NOLINT

  /// (a + b*sqrt(radicand)) / 2. Throws std::invalid_argument if b == 0
  /// and a is odd.
  static QuadraticValue from_parts(BigInt a, BigInt b, BigInt radicand);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& radicand() const { return r_; }

  bool is_rational() const { return b_ == 0; }
  /// The integer value when rational.
  std::optional<BigInt> as_integer() const;
  /// True iff the value is one of 0, 1, -1.
  bool is_zero_or_unit() const;

  /// Complex conjugate: flips b for negative radicands, identity otherwise.
  QuadraticValue conj() const;

  QuadraticValue operator-() const;
  QuadraticValue& operator+=(const QuadraticValue& o);
  QuadraticValue& operator-=(const QuadraticValue& o) { return *this += -o; }
  friend QuadraticValue operator+(QuadraticValue x, const QuadraticValue& y) { return x += y; }
  friend QuadraticValue operator-(QuadraticValue x, const QuadraticValue& y) { return x -= y; }

  friend bool operator==(const QuadraticValue&, const QuadraticValue&) = default;

  /// "(a+b*sqrt(R))/2" for surds, a plain integer otherwise.
  std::string to_string() const;

 private:
  void normalize();

  BigInt a_ = 0;
  BigInt b_ = 0;
  BigInt r_ = 0;
};

/// Exact accumulator for sums of products of quadratic values, kept as
/// (rational + sum_R c_R*sqrt(R)) / 4 so no division ever happens.
class QuadraticSum {
 public:
  /// += weight * x * y
  void add_product(const BigInt& weight, const QuadraticValue& x, const QuadraticValue& y);
  /// += weight * x
  void add(const BigInt& weight, const QuadraticValue& x);

  /// True iff the accumulated value is exactly the integer v.
  bool equals(const BigInt& v) const;
  bool is_zero() const { return equals(0); }

  std::string to_string() const;

 private:
  BigInt rational4_ = 0;
  std::map<BigInt, BigInt> surd4_;  // radicand -> coefficient, times 4
};

}  // namespace signclass
