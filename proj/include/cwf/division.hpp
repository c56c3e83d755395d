#pragma once

#include <vector>

#include "cwf/integer.hpp"
#include "cwf/linear_form.hpp"
#include "cwf/plft.hpp"
#include "cwf/rational.hpp"

namespace cwf {

/// num = quotient·den + remainder, with remainder.a < den.a or remainder.b < den.b.
struct DivisionResult {
  Integer quotient;
  LinearForm remainder;
};

/// Division algorithm for positive linear forms. Requires den ≺ num
/// (NotComparable otherwise); ZeroRemainder when num is an exact multiple of den.
DivisionResult divide_forms(const LinearForm& num, const LinearForm& den);

/// Integer part of f: the division quotient for a right child, 0 for a left
/// child. Throws UndefinedPart for an orphan.
Integer integer_part(const Plft& f);

/// (rz+s)/(cz+d) for a right child, f itself for a left child. Same determinant
/// as f. Throws UndefinedPart for an orphan.
Plft fractional_part(const Plft& f);

/// [q0, ..., q_{k-1}; root]: f = q0 + 1/(q1 + 1/(... + 1/(q_{k-1} + 1/root))).
/// root is always an orphan and det(root) = (-1)^k det(f).
struct ContinuedFraction {
  std::vector<Integer> quotients;
  Plft root;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Euclidean algorithm on the two forms of f, run until the remaining pair is
/// incomparable. q0 is 0 exactly when f is a left child.
ContinuedFraction euclid_cf(const Plft& f);

/// Folds a continued fraction back into its matrix. Throws InvalidRoot when
/// cf.root is not an orphan.
Plft reconstruct(const ContinuedFraction& cf);

/// Continued fraction written the traditional way for SL2/GL2 vertices: a
/// trailing `q; J` (i.e. q + 1/(1/z)) is absorbed into the tail as q + z.
/// Every other continued fraction is returned unchanged (tail = root).
struct StandardForm {
  std::vector<Integer> quotients;
  Plft tail;

  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

StandardForm standard_form(const ContinuedFraction& cf);

/// Folds a standard form; the tail need not be an orphan.
Plft evaluate(const StandardForm& sf);

/// Row of f in T(z): the sum of its continued-fraction quotients.
/// Throws NotDeterminantOne.
Integer depth_det1(const Plft& f);

/// Finite continued fraction [a0, ..., ak] of x > 0, last term >= 2 unless
/// x is an integer. Throws NonPositive.
std::vector<Integer> rational_cf(const ReducedRational& x);

/// Row of x in the Calkin-Wilf tree: sum(rational_cf(x)) - 1. Throws NonPositive.
Integer rational_depth(const ReducedRational& x);

}  // namespace cwf
