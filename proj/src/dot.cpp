#include "cwf/dot.hpp"

#include <sstream>
#include <vector>

#include "cwf/error.hpp"
#include "cwf/text.hpp"

namespace cwf {

std::string dot_export(const Plft& root, std::size_t depth, std::size_t cap) {
  if (depth > cap) throw Error(ErrorCode::DepthCapExceeded, "DOT depth exceeds the materialization cap");
  std::ostringstream out;
  out << "digraph T {\n";
  out << "  node [shape=plaintext];\n";
  std::vector<Plft> row{root};
  for (std::size_t n = 0; n <= depth; ++n) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << "  \"" << n << ':' << j + 1 << "\" [label=\"" << to_label(row[j]) << "\"];\n";
    if (n == depth) break;
    std::vector<Plft> next;
    next.reserve(2 * row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << "  \"" << n << ':' << j + 1 << "\" -> \"" << n + 1 << ':' << 2 * j + 1 << "\";\n";
      out << "  \"" << n << ':' << j + 1 << "\" -> \"" << n + 1 << ':' << 2 * j + 2 << "\";\n";
      next.push_back(left_child(row[j]));
      next.push_back(right_child(row[j]));
    }
    row = std::move(next);
  }
  out << "}\n";
  return out.str();
}

}  // namespace cwf
