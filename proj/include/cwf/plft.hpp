#pragma once

#include <compare>

#include "cwf/integer.hpp"
#include "cwf/linear_form.hpp"
#include "cwf/rational.hpp"

namespace cwf {

/// Positive linear fractional transformation (az+b)/(cz+d), held as the
/// formal matrix [a b; c d] with nonnegative entries and ad - bc != 0.
///
/// No cancellation is ever performed: [2 0; 0 2] and [1 0; 0 1] are
/// different values. Equality and ordering are coefficient-wise
/// (lexicographic on a, b, c, d).
class Plft {
 public:
  /// Throws NegativeCoefficient or ZeroDeterminant.
  Plft(Integer a, Integer b, Integer c, Integer d);
  Plft(const LinearForm& numerator, const LinearForm& denominator);

  static Plft identity() { return Plft(1, 0, 0, 1); }
  /// J = [0 1; 1 0], the function 1/z.
  static Plft swap() { return Plft(0, 1, 1, 0); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  LinearForm numerator() const { return LinearForm(a_, b_); }
  LinearForm denominator() const { return LinearForm(c_, d_); }

  friend bool operator==(const Plft&, const Plft&) = default;
  friend std::strong_ordering operator<=>(const Plft& x, const Plft& y);

 private:
  Integer a_, b_, c_, d_;
};

enum class ChildKind { LeftChild, RightChild, Orphan };

/// ad - bc.
Integer det(const Plft& f);

/// f∘g, i.e. the matrix product f·g.
Plft compose(const Plft& f, const Plft& g);

/// (a*x + b)/(c*x + d). Throws PoleAtInput when c*x + d == 0.
ReducedRational eval(const Plft& f, const ReducedRational& x);

/// f/(f+1) = L1·f = [a b; a+c b+d].
Plft left_child(const Plft& f);
/// f+1 = R1·f = [a+c b+d; c d].
Plft right_child(const Plft& f);

/// L1 = [1 0; 1 1] and R1 = [1 1; 0 1].
inline Plft left_generator() { return Plft(1, 0, 1, 1); }
inline Plft right_generator() { return Plft(1, 1, 0, 1); }

ChildKind classify(const Plft& f);

/// Inverse of left_child/right_child. Throws NoParent for an orphan.
Plft parent(const Plft& f);

inline bool is_orphan(const Plft& f) { return classify(f) == ChildKind::Orphan; }

/// max(a+b, c+d).
Integer plft_height(const Plft& f);

/// 1/f(1/z) = [d c; b a]; an involution.
Plft phi(const Plft& f);

/// 1/f = [c d; a b]; negates the determinant.
Plft reciprocal(const Plft& f);

}  // namespace cwf
