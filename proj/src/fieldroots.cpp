#include "cwf/fieldroots.hpp"

namespace cwf {

namespace {

const ReducedRational kMinusOne(-1);

}  // namespace

FieldChildren rational_children(const ReducedRational& x) {
  ReducedRational right = x + ReducedRational(1);
  if (x == kMinusOne) return {std::nullopt, std::move(right)};
  return {x / right, right};
}

RootVerdict root_viability(const ReducedRational& x) {
  if (!x.is_negative()) return {true, std::nullopt};
  Word witness;
  ReducedRational w = x;
  while (w != kMinusOne) {
    FieldChildren kids = rational_children(w);
    if (w < kMinusOne) {
      witness.push_back(Step::R);
      w = std::move(kids.right);
    } else {
      witness.push_back(Step::L);
      w = std::move(*kids.left);
    }
  }
  return {false, std::move(witness)};
}

std::optional<ReducedRational> replay(const ReducedRational& x, const Word& w) {
  ReducedRational cur = x;
  for (Step s : w) {
    FieldChildren kids = rational_children(cur);
    if (s == Step::R) {
      cur = std::move(kids.right);
    } else if (kids.left) {
      cur = std::move(*kids.left);
    } else {
      return std::nullopt;
    }
  }
  return cur;
}

}  // namespace cwf
