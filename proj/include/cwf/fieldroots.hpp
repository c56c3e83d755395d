#pragma once

#include <optional>

#include "cwf/rational.hpp"
#include "cwf/treenav.hpp"

namespace cwf {

/// Whether a rational roots an infinite binary tree under w -> w/(w+1), w+1.
/// When it does not, `witness` is a path from the root to -1.
struct RootVerdict {
  bool viable = true;
  std::optional<Word> witness;
};

/// Left child x/(x+1) (absent at x = -1) and right child x+1.
struct FieldChildren {
  std::optional<ReducedRational> left;
  ReducedRational right;
};

FieldChildren rational_children(const ReducedRational& x);

/// Viable iff x >= 0. For x < 0 the witness is built by the forced descent:
/// R while below -1, L while in (-1, 0); every step lowers the height.
RootVerdict root_viability(const ReducedRational& x);

/// Follows w from x with rational_children; nullopt if an undefined left child
/// of -1 is requested along the way.
std::optional<ReducedRational> replay(const ReducedRational& x, const Word& w);

}  // namespace cwf
