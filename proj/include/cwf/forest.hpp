#pragma once

#include <cstdint>
#include <vector>

#include "cwf/integer.hpp"
#include "cwf/plft.hpp"

namespace cwf {

/// O(D): every orphan of determinant D, sorted lexicographically by (a, b, c, d).
struct OrphanSet {
  std::int64_t det = 0;
  std::vector<Plft> orphans;
};

/// Throws ZeroDeterminant for D == 0.
OrphanSet enumerate_orphans(std::int64_t det);

/// h(D) = |O(D)|.
std::size_t class_number(std::int64_t det);

struct TreeCount {
  Plft root;
  std::size_t count = 0;
};

struct PartitionReport {
  std::int64_t det = 0;
  std::int64_t height = 0;
  std::vector<TreeCount> trees;  // same order as enumerate_orphans
  std::size_t scanned = 0;       // matrices of det D and height <= H
  std::size_t stray_roots = 0;   // located roots outside O(D)
  std::size_t replay_failures = 0;
  std::size_t collisions = 0;    // vertices reached twice by tree expansion
  std::size_t missing = 0;       // scanned matrices never reached by expansion
  bool pass = false;
};

/// Brute-force check of the forest partition of F(D) restricted to height <= H.
PartitionReport verify_partition(std::int64_t det, std::int64_t height);

}  // namespace cwf
