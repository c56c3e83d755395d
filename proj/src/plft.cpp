#include "cwf/plft.hpp"

#include "cwf/error.hpp"

namespace cwf {

Plft::Plft(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ < 0 || b_ < 0 || c_ < 0 || d_ < 0)
    throw Error(ErrorCode::NegativeCoefficient, "matrix entries must be nonnegative");
  if (a_ * d_ == b_ * c_) throw Error(ErrorCode::ZeroDeterminant, "matrix has determinant 0");
}

Plft::Plft(const LinearForm& numerator, const LinearForm& denominator)
    : Plft(numerator.a(), numerator.b(), denominator.a(), denominator.b()) {}

std::strong_ordering operator<=>(const Plft& x, const Plft& y) {
  auto cmp = [](const Integer& p, const Integer& q) {
    return p < q ? std::strong_ordering::less : p > q ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  if (auto r = cmp(x.a_, y.a_); r != 0) return r;
  if (auto r = cmp(x.b_, y.b_); r != 0) return r;
  if (auto r = cmp(x.c_, y.c_); r != 0) return r;
  return cmp(x.d_, y.d_);
}

Integer det(const Plft& f) { return f.a() * f.d() - f.b() * f.c(); }

Plft compose(const Plft& f, const Plft& g) {
  return Plft(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
              f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

ReducedRational eval(const Plft& f, const ReducedRational& x) {
  Integer den = f.c() * x.num() + f.d() * x.den();
  if (den == 0) throw Error(ErrorCode::PoleAtInput, "denominator vanishes at the input");
  return ReducedRational(f.a() * x.num() + f.b() * x.den(), den);
}

Plft left_child(const Plft& f) { return Plft(f.a(), f.b(), f.a() + f.c(), f.b() + f.d()); }

Plft right_child(const Plft& f) { return Plft(f.a() + f.c(), f.b() + f.d(), f.c(), f.d()); }

ChildKind classify(const Plft& f) {
  const LinearForm num = f.numerator();
  const LinearForm den = f.denominator();
  if (form_less(num, den)) return ChildKind::LeftChild;
  if (form_less(den, num)) return ChildKind::RightChild;
  return ChildKind::Orphan;
}

Plft parent(const Plft& f) {
  switch (classify(f)) {
    case ChildKind::LeftChild: return Plft(f.a(), f.b(), f.c() - f.a(), f.d() - f.b());
    case ChildKind::RightChild: return Plft(f.a() - f.c(), f.b() - f.d(), f.c(), f.d());
    case ChildKind::Orphan: break;
  }
  throw Error(ErrorCode::NoParent, "orphan has no parent");
}

Integer plft_height(const Plft& f) {
  Integer top = f.a() + f.b();
  Integer bottom = f.c() + f.d();
  return top > bottom ? top : bottom;
}

Plft phi(const Plft& f) { return Plft(f.d(), f.c(), f.b(), f.a()); }

Plft reciprocal(const Plft& f) { return Plft(f.c(), f.d(), f.a(), f.b()); }

}  // namespace cwf
