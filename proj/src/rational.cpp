#include "cwf/rational.hpp"

#include "cwf/error.hpp"

namespace cwf {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::HeightOfZero: return "HeightOfZero";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::PoleAtInput: return "PoleAtInput";
    case ErrorCode::NoParent: return "NoParent";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::ZeroRemainder: return "ZeroRemainder";
    case ErrorCode::UndefinedPart: return "UndefinedPart";
    case ErrorCode::InvalidRoot: return "InvalidRoot";
    case ErrorCode::NotDeterminantOne: return "NotDeterminantOne";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoSuccessor: return "NoSuccessor";
    case ErrorCode::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorCode::InvalidRule: return "InvalidRule";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

ReducedRational::ReducedRational(Integer n, Integer d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  Integer g = gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

ReducedRational ReducedRational::operator-() const { return ReducedRational(-num_, den_, Trusted{}); }

ReducedRational ReducedRational::reciprocal() const {
  if (num_ == 0) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  if (num_ < 0) return ReducedRational(-den_, -num_, Trusted{});
  return ReducedRational(den_, num_, Trusted{});
}

ReducedRational operator+(const ReducedRational& x, const ReducedRational& y) {
  return ReducedRational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

ReducedRational operator-(const ReducedRational& x, const ReducedRational& y) {
  return ReducedRational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

ReducedRational operator*(const ReducedRational& x, const ReducedRational& y) {
  return ReducedRational(x.num_ * y.num_, x.den_ * y.den_);
}

ReducedRational operator/(const ReducedRational& x, const ReducedRational& y) {
  if (y.num_ == 0) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
  return ReducedRational(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering operator<=>(const ReducedRational& x, const ReducedRational& y) {
  Integer lhs = x.num_ * y.den_;
  Integer rhs = y.num_ * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer rational_height(const ReducedRational& x) {
  if (x.is_zero()) throw Error(ErrorCode::HeightOfZero, "height of 0 is undefined");
  Integer n = abs_value(x.num());
  return n > x.den() ? n : x.den();
}

}  // namespace cwf
