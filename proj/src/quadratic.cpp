#include "signclass/quadratic.hpp"

#include <sstream>
#include <stdexcept>

namespace signclass {

QuadraticValue QuadraticValue::from_parts(BigInt a, BigInt b, BigInt radicand) {
  QuadraticValue v;
  v.a_ = std::move(a);
  v.b_ = std::move(b);
  v.r_ = std::move(radicand);
  v.normalize();
  if (v.b_ == 0 && v.a_ % 2 != 0) throw std::invalid_argument("rational quadratic value must be an integer");
  return v;
}

void QuadraticValue::normalize() {
  if (r_ == 0) b_ = 0;
  if (b_ == 0) r_ = 0;
}

std::optional<BigInt> QuadraticValue::as_integer() const {
  if (b_ != 0) return std::nullopt;
  return a_ / 2;
}

bool QuadraticValue::is_zero_or_unit() const { return b_ == 0 && (a_ == 0 || a_ == 2 || a_ == -2); }

QuadraticValue QuadraticValue::conj() const {
  QuadraticValue v = *this;
  if (r_ < 0) v.b_ = -v.b_;
  return v;
}

QuadraticValue QuadraticValue::operator-() const {
  QuadraticValue v = *this;
  v.a_ = -v.a_;
  v.b_ = -v.b_;
  return v;
}

QuadraticValue& QuadraticValue::operator+=(const QuadraticValue& o) {
  if (b_ != 0 && o.b_ != 0 && r_ != o.r_) throw std::domain_error("cannot add surds with different radicands");
  if (b_ == 0) r_ = o.r_;
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

std::string QuadraticValue::to_string() const {
  if (b_ == 0) return BigInt(a_ / 2).str();
  std::ostringstream os;
  os << '(' << a_ << (b_ < 0 ? '-' : '+') << boost::multiprecision::abs(b_) << "*sqrt(" << r_ << "))/2";
  return os.str();
}

void QuadraticSum::add_product(const BigInt& weight, const QuadraticValue& x, const QuadraticValue& y) {
  // 4xy = a1 a2 + a1 b2 sqrt(S) + a2 b1 sqrt(R) + b1 b2 sqrt(R) sqrt(S)
  if (x.b() != 0 && y.b() != 0 && x.radicand() != y.radicand()) {
    throw std::domain_error("cannot multiply surds with different radicands");
  }
  rational4_ += weight * x.a() * y.a();
  if (y.b() != 0) surd4_[y.radicand()] += weight * x.a() * y.b();
  if (x.b() != 0) surd4_[x.radicand()] += weight * y.a() * x.b();
  if (x.b() != 0 && y.b() != 0) rational4_ += weight * x.b() * y.b() * x.radicand();
}

void QuadraticSum::add(const BigInt& weight, const QuadraticValue& x) {
  rational4_ += weight * x.a() * 2;
  if (x.b() != 0) surd4_[x.radicand()] += weight * x.b() * 2;
}

bool QuadraticSum::equals(const BigInt& v) const {
  if (rational4_ != v * 4) return false;
  for (const auto& [r, c] : surd4_) {
    if (c != 0) return false;
  }
  return true;
}

std::string QuadraticSum::to_string() const {
  std::ostringstream os;
  os << '(' << rational4_;
  for (const auto& [r, c] : surd4_) {
    if (c != 0) os << (c < 0 ? '-' : '+') << boost::multiprecision::abs(c) << "*sqrt(" << r << ')';
  }
  os << ")/4";
  return os.str();
}

}  // namespace signclass
