#include "cwf/forest.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cwf/error.hpp"
#include "cwf/treenav.hpp"

namespace cwf {

namespace {

// D > 0: a > c and b < d force b + c <= D - 1, then a*d = D + b*c.
std::vector<Plft> positive_orphans(std::int64_t det) {
  std::vector<Plft> out;
  for (std::int64_t b = 0; b <= det - 1; ++b) {
    for (std::int64_t c = 0; b + c <= det - 1; ++c) {
      const std::int64_t product = det + b * c;
      for (std::int64_t a = c + 1; a <= product; ++a) {
        if (product % a != 0) continue;
        const std::int64_t d = product / a;
        if (d > b) out.emplace_back(a, b, c, d);
      }
    }
  }
  return out;
}

}  // namespace

OrphanSet enumerate_orphans(std::int64_t det) {
  if (det == 0) throw Error(ErrorCode::ZeroDeterminant, "there are no matrices of determinant 0");
  OrphanSet set{det, {}};
  if (det > 0) {
    set.orphans = positive_orphans(det);
  } else {
    for (const Plft& f : positive_orphans(-det)) set.orphans.push_back(reciprocal(f));
  }
  std::sort(set.orphans.begin(), set.orphans.end());
  return set;
}

std::size_t class_number(std::int64_t det) { return enumerate_orphans(det).orphans.size(); }

PartitionReport verify_partition(std::int64_t det, std::int64_t height) {
  PartitionReport report;
  report.det = det;
  report.height = height;

  const OrphanSet roots = enumerate_orphans(det);
  std::map<Plft, std::size_t> root_index;
  for (std::size_t i = 0; i < roots.orphans.size(); ++i) {
    root_index.emplace(roots.orphans[i], i);
    report.trees.push_back({roots.orphans[i], 0});
  }

  // Direct scan of F(D) up to height H: each entry is at most H.
  std::set<Plft> scanned;
  for (std::int64_t a = 0; a <= height; ++a)
    for (std::int64_t b = 0; a + b <= height; ++b)
      for (std::int64_t c = 0; c <= height; ++c)
        for (std::int64_t d = 0; c + d <= height; ++d) {
          if (a * d - b * c != det) continue;
          Plft f(a, b, c, d);
          Located loc = locate(f);
          auto it = root_index.find(loc.root);
          if (it == root_index.end()) {
            ++report.stray_roots;
          } else {
            ++report.trees[it->second].count;
          }
          if (vertex_at(loc.root, loc.word) != f) ++report.replay_failures;
          scanned.insert(std::move(f));
        }
  report.scanned = scanned.size();

  // Expand every tree down to height H; each vertex must be reached once.
  std::set<Plft> reached;
  const Integer limit = height;
  for (const Plft& root : roots.orphans) {
    if (plft_height(root) > limit) continue;
    std::deque<Plft> queue{root};
    while (!queue.empty()) {
      Plft f = std::move(queue.front());
      queue.pop_front();
      if (!reached.insert(f).second) ++report.collisions;
      for (Plft child : {left_child(f), right_child(f)})
        if (plft_height(child) <= limit) queue.push_back(std::move(child));
    }
  }
  for (const Plft& f : scanned)
    if (!reached.contains(f)) ++report.missing;

  report.pass = report.stray_roots == 0 && report.replay_failures == 0 && report.collisions == 0 &&
                report.missing == 0 && reached.size() == scanned.size();
  return report;
}

}  // namespace cwf
