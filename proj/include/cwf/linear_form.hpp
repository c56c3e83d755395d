#pragma once

#include "cwf/integer.hpp"
#include "cwf/rational.hpp"

namespace cwf {

/// Positive linear form a*z + b: a, b >= 0 and a + b > 0.
class LinearForm {
 public:
  LinearForm(Integer a, Integer b);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  /// a + b; strictly positive.
  Integer weight() const { return a_ + b_; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Integer a_;
  Integer b_;
};

/// f ⪯ g: coefficient-wise f.a <= g.a and f.b <= g.b.
bool form_leq(const LinearForm& f, const LinearForm& g);

/// f ≺ g: f ⪯ g and f != g.
bool form_less(const LinearForm& f, const LinearForm& g);

/// Distinct forms ordered one way or the other under ⪯.
bool comparable(const LinearForm& f, const LinearForm& g);

/// gcd(a, b) of a form.
Integer content(const LinearForm& f);

/// Greatest common divisor in Z[z], normalized to nonnegative coefficients.
/// A constant result is returned as a form with a == 0.
LinearForm form_gcd(const LinearForm& f, const LinearForm& g);

/// a*x + b.
ReducedRational form_eval(const LinearForm& f, const ReducedRational& x);

LinearForm operator+(const LinearForm& f, const LinearForm& g);
LinearForm operator*(const Integer& k, const LinearForm& f);

}  // namespace cwf
