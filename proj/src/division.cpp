#include "cwf/division.hpp"

#include <algorithm>
#include <numeric>

#include "cwf/error.hpp"

namespace cwf {

DivisionResult divide_forms(const LinearForm& num, const LinearForm& den) {
  if (!form_less(den, num)) throw Error(ErrorCode::NotComparable, "divisor form is not below the dividend");
  Integer q;
  if (den.a() == 0) {
    q = num.b() / den.b();
  } else if (den.b() == 0) {
    q = num.a() / den.a();
  } else {
    q = std::min(Integer(num.a() / den.a()), Integer(num.b() / den.b()));
  }
  Integer r = num.a() - q * den.a();
  Integer s = num.b() - q * den.b();
  if (r == 0 && s == 0) throw Error(ErrorCode::ZeroRemainder, "dividend is a multiple of the divisor");
  return {std::move(q), LinearForm(std::move(r), std::move(s))};
}

namespace {

struct Parts {
  Integer integer;
  Plft fractional;
};

Parts split(const Plft& f) {
  switch (classify(f)) {
    case ChildKind::LeftChild: return {0, f};
    case ChildKind::RightChild: {
      DivisionResult dr = divide_forms(f.numerator(), f.denominator());
      return {std::move(dr.quotient), Plft(dr.remainder, f.denominator())};
    }
    case ChildKind::Orphan: break;
  }
  throw Error(ErrorCode::UndefinedPart, "integer part of an orphan is undefined");
}

// q + 1/m
Plft add_reciprocal(const Integer& q, const Plft& m) {
  return Plft(m.c() + q * m.a(), m.d() + q * m.b(), m.a(), m.b());
}

Plft fold(const std::vector<Integer>& quotients, Plft tail) {
  if (quotients.empty()) return tail;
  // The innermost quotient meets 1/tail; the rest fold outward.
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) tail = add_reciprocal(*it, tail);
  return tail;
}

}  // namespace

Integer integer_part(const Plft& f) { return split(f).integer; }

Plft fractional_part(const Plft& f) { return split(f).fractional; }

ContinuedFraction euclid_cf(const Plft& f) {
  std::vector<Integer> quotients;
  LinearForm prev = f.numerator();
  LinearForm cur = f.denominator();
  // r_i + s_i strictly decreases after the first step.
  const Integer bound = prev.weight() + cur.weight() + 2;
  for (Integer steps = 0;; ++steps) {
    if (steps > bound) throw Error(ErrorCode::InvalidRoot, "Euclidean algorithm failed to terminate");
    if (form_less(prev, cur)) {
      quotients.emplace_back(0);
      std::swap(prev, cur);
    } else if (form_less(cur, prev)) {
      DivisionResult dr = divide_forms(prev, cur);
      quotients.push_back(std::move(dr.quotient));
      prev = std::move(cur);
      cur = std::move(dr.remainder);
    } else {
      return {std::move(quotients), Plft(prev, cur)};
    }
  }
}

Plft reconstruct(const ContinuedFraction& cf) {
  if (!is_orphan(cf.root)) throw Error(ErrorCode::InvalidRoot, "continued-fraction root must be an orphan");
  for (std::size_t i = 1; i < cf.quotients.size(); ++i)
    if (cf.quotients[i] < 1) throw Error(ErrorCode::InvalidRoot, "inner quotients must be positive");
  if (!cf.quotients.empty() && cf.quotients.front() < 0)
    throw Error(ErrorCode::InvalidRoot, "leading quotient must be nonnegative");
  return fold(cf.quotients, cf.root);
}

StandardForm standard_form(const ContinuedFraction& cf) {
  if (cf.root == Plft::swap() && !cf.quotients.empty()) {
    std::vector<Integer> qs(cf.quotients.begin(), cf.quotients.end() - 1);
    return {std::move(qs), Plft(1, cf.quotients.back(), 0, 1)};
  }
  return {cf.quotients, cf.root};
}

Plft evaluate(const StandardForm& sf) { return fold(sf.quotients, sf.tail); }

Integer depth_det1(const Plft& f) {
  if (det(f) != 1) throw Error(ErrorCode::NotDeterminantOne, "depth formula needs determinant 1");
  ContinuedFraction cf = euclid_cf(f);
  return std::accumulate(cf.quotients.begin(), cf.quotients.end(), Integer(0));
}

std::vector<Integer> rational_cf(const ReducedRational& x) {
  if (!x.is_positive()) throw Error(ErrorCode::NonPositive, "continued fraction needs a positive rational");
  std::vector<Integer> out;
  Integer p = x.num();
  Integer q = x.den();
  while (q != 0) {
    out.push_back(p / q);
    Integer r = p % q;
    p = std::move(q);
    q = std::move(r);
  }
  return out;
}

Integer rational_depth(const ReducedRational& x) {
  std::vector<Integer> cf = rational_cf(x);
  return std::accumulate(cf.begin(), cf.end(), Integer(0)) - 1;
}

}  // namespace cwf
