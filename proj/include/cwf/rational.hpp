#pragma once

#include <compare>
#include <string>

#include "cwf/integer.hpp"

namespace cwf {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Every constructor reduces eagerly, so `gcd(|num|, den) == 1` and
/// `den >= 1` hold for every value; zero is always 0/1.
class ReducedRational {
 public:
  ReducedRational() : num_(0), den_(1) {}
  ReducedRational(Integer n) : num_(std::move(n)), den_(1) {}
  ReducedRational(long long n) : num_(n), den_(1) {}
  ReducedRational(Integer n, Integer d);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer not exceeding the value.
  Integer floor() const { return floor_div(num_, den_); }

  ReducedRational operator-() const;
  ReducedRational reciprocal() const;

  friend ReducedRational operator+(const ReducedRational& x, const ReducedRational& y);
  friend ReducedRational operator-(const ReducedRational& x, const ReducedRational& y);
  friend ReducedRational operator*(const ReducedRational& x, const ReducedRational& y);
  friend ReducedRational operator/(const ReducedRational& x, const ReducedRational& y);

  friend bool operator==(const ReducedRational& x, const ReducedRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const ReducedRational& x, const ReducedRational& y);

 private:
  struct Trusted {};
  ReducedRational(Integer n, Integer d, Trusted) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_;
  Integer den_;
};

/// max(|num|, den). Throws HeightOfZero for 0.
Integer rational_height(const ReducedRational& x);

}  // namespace cwf
