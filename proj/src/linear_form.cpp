#include "cwf/linear_form.hpp"

#include "cwf/error.hpp"

namespace cwf {

LinearForm::LinearForm(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 0 || b_ < 0) throw Error(ErrorCode::NegativeCoefficient, "linear form with a negative coefficient");
  if (a_ == 0 && b_ == 0) throw Error(ErrorCode::ZeroForm, "linear form 0*z+0 is not positive");
}

bool form_leq(const LinearForm& f, const LinearForm& g) { return f.a() <= g.a() && f.b() <= g.b(); }

bool form_less(const LinearForm& f, const LinearForm& g) { return form_leq(f, g) && f != g; }

bool comparable(const LinearForm& f, const LinearForm& g) { return form_less(f, g) || form_less(g, f); }

Integer content(const LinearForm& f) { return gcd(f.a(), f.b()); }

LinearForm form_gcd(const LinearForm& f, const LinearForm& g) {
  Integer cf = content(f);
  Integer cg = content(g);
  Integer k = gcd(cf, cg);
  // Non-proportional forms share no factor of degree 1.
  if (f.a() * g.b() != f.b() * g.a()) return LinearForm(0, k);
  // Proportional forms have the same primitive part.
  return LinearForm(k * (f.a() / cf), k * (f.b() / cf));
}

ReducedRational form_eval(const LinearForm& f, const ReducedRational& x) {
  return ReducedRational(f.a() * x.num() + f.b() * x.den(), x.den());
}

LinearForm operator+(const LinearForm& f, const LinearForm& g) { return LinearForm(f.a() + g.a(), f.b() + g.b()); }

LinearForm operator*(const Integer& k, const LinearForm& f) { return LinearForm(k * f.a(), k * f.b()); }

}  // namespace cwf
