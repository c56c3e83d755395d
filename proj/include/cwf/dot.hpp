#pragma once

#include <cstddef>
#include <string>

#include "cwf/plft.hpp"
#include "cwf/treenav.hpp"

namespace cwf {

/// Graphviz digraph of rows 0..depth of T(root). Node ids are `n:j` addresses,
/// labels are function-style renderings, edges go left child first.
/// Throws DepthCapExceeded when depth > cap.
std::string dot_export(const Plft& root, std::size_t depth, std::size_t cap = kMaterializeCap);

}  // namespace cwf
