#include "cwf/generalized.hpp"

#include "cwf/error.hpp"

namespace cwf {

GenRule::GenRule(Integer u, Integer v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_ < 1 || v_ < 1) throw Error(ErrorCode::InvalidRule, "generation rule needs u >= 1 and v >= 1");
}

namespace {

void require_positive(const ReducedRational& x) {
  if (!x.is_positive()) throw Error(ErrorCode::NonPositive, "generation rule acts on positive rationals");
}

}  // namespace

RationalPair gen_children(const GenRule& rule, const ReducedRational& x) {
  require_positive(x);
  const Integer& a = x.num();
  const Integer& b = x.den();
  return {ReducedRational(a, rule.u() * a + b), ReducedRational(a + rule.v() * b, b)};
}

ChildKind gen_classify(const GenRule& rule, const ReducedRational& x) {
  require_positive(x);
  if (x.den() > rule.u() * x.num()) return ChildKind::LeftChild;
  if (x.num() > rule.v() * x.den()) return ChildKind::RightChild;
  return ChildKind::Orphan;
}

ReducedRational gen_parent(const GenRule& rule, const ReducedRational& x) {
  switch (gen_classify(rule, x)) {
    case ChildKind::LeftChild: return ReducedRational(x.num(), x.den() - rule.u() * x.num());
    case ChildKind::RightChild: return ReducedRational(x.num() - rule.v() * x.den(), x.den());
    case ChildKind::Orphan: break;
  }
  throw Error(ErrorCode::NoParent, "orphan has no parent under this rule");
}

std::pair<Plft, Plft> gen_matrices(const GenRule& rule) {
  return {Plft(1, 0, rule.u(), 1), Plft(1, rule.v(), 0, 1)};
}

RationalLocated gen_locate(const GenRule& rule, const ReducedRational& x) {
  Word word;
  ReducedRational cur = x;
  for (ChildKind kind = gen_classify(rule, cur); kind != ChildKind::Orphan; kind = gen_classify(rule, cur)) {
    word.push_back(kind == ChildKind::LeftChild ? Step::L : Step::R);
    cur = gen_parent(rule, cur);
  }
  word.reverse();
  return {std::move(cur), std::move(word)};
}

ReducedRational gen_vertex_at(const GenRule& rule, const ReducedRational& root, const Word& w) {
  ReducedRational x = root;
  for (Step s : w) {
    RationalPair kids = gen_children(rule, x);
    x = s == Step::L ? std::move(kids.left) : std::move(kids.right);
  }
  return x;
}

Plft gen_left_child(const GenRule& rule, const Plft& f) {
  return Plft(f.a(), f.b(), rule.u() * f.a() + f.c(), rule.u() * f.b() + f.d());
}

Plft gen_right_child(const GenRule& rule, const Plft& f) {
  return Plft(f.a() + rule.v() * f.c(), f.b() + rule.v() * f.d(), f.c(), f.d());
}

ChildKind gen_classify(const GenRule& rule, const Plft& f) {
  const Integer& u = rule.u();
  const Integer& v = rule.v();
  if (f.c() >= u * f.a() && f.d() >= u * f.b()) return ChildKind::LeftChild;
  if (f.a() >= v * f.c() && f.b() >= v * f.d()) return ChildKind::RightChild;
  return ChildKind::Orphan;
}

Plft gen_parent(const GenRule& rule, const Plft& f) {
  switch (gen_classify(rule, f)) {
    case ChildKind::LeftChild:
      return Plft(f.a(), f.b(), f.c() - rule.u() * f.a(), f.d() - rule.u() * f.b());
    case ChildKind::RightChild:
      return Plft(f.a() - rule.v() * f.c(), f.b() - rule.v() * f.d(), f.c(), f.d());
    case ChildKind::Orphan: break;
  }
  throw Error(ErrorCode::NoParent, "orphan has no parent under this rule");
}

Located gen_locate(const GenRule& rule, const Plft& f) {
  Word word;
  Plft cur = f;
  for (ChildKind kind = gen_classify(rule, cur); kind != ChildKind::Orphan; kind = gen_classify(rule, cur)) {
    word.push_back(kind == ChildKind::LeftChild ? Step::L : Step::R);
    cur = gen_parent(rule, cur);
  }
  word.reverse();
  return {std::move(cur), std::move(word)};
}

Plft gen_vertex_at(const GenRule& rule, const Plft& root, const Word& w) {
  Plft f = root;
  for (Step s : w) f = s == Step::L ? gen_left_child(rule, f) : gen_right_child(rule, f);
  return f;
}

}  // namespace cwf
