#pragma once

#include <utility>

#include "cwf/integer.hpp"
#include "cwf/plft.hpp"
#include "cwf/rational.hpp"
#include "cwf/treenav.hpp"

namespace cwf {

/// Generation rule with children w/(uw+1) and w+v, u, v >= 1.
/// (1, 1) is the Calkin-Wilf rule.
class GenRule {
 public:
  /// Throws InvalidRule unless u >= 1 and v >= 1.
  GenRule(Integer u, Integer v);

  const Integer& u() const { return u_; }
  const Integer& v() const { return v_; }

 private:
  Integer u_;
  Integer v_;
};

struct RationalPair {
  ReducedRational left;
  ReducedRational right;
};

/// a/(ua+b) and (a+vb)/b. Throws NonPositive.
RationalPair gen_children(const GenRule& rule, const ReducedRational& x);

/// LeftChild iff b > ua, RightChild iff a > vb, otherwise Orphan
/// (1/u <= x <= v). Throws NonPositive.
ChildKind gen_classify(const GenRule& rule, const ReducedRational& x);

/// Throws NoParent on an orphan.
ReducedRational gen_parent(const GenRule& rule, const ReducedRational& x);

/// L_u = [1 0; u 1], R_v = [1 v; 0 1].
std::pair<Plft, Plft> gen_matrices(const GenRule& rule);

RationalLocated gen_locate(const GenRule& rule, const ReducedRational& x);

ReducedRational gen_vertex_at(const GenRule& rule, const ReducedRational& root, const Word& w);

// Matrix-side trees: children L_u·f and R_v·f.

Plft gen_left_child(const GenRule& rule, const Plft& f);
Plft gen_right_child(const GenRule& rule, const Plft& f);

/// LeftChild iff f = L_u·g for some Plft g, RightChild iff f = R_v·g.
ChildKind gen_classify(const GenRule& rule, const Plft& f);
Plft gen_parent(const GenRule& rule, const Plft& f);
Located gen_locate(const GenRule& rule, const Plft& f);
Plft gen_vertex_at(const GenRule& rule, const Plft& root, const Word& w);

}  // namespace cwf
