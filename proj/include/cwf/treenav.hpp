#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwf/integer.hpp"
#include "cwf/plft.hpp"
#include "cwf/rational.hpp"

namespace cwf {

enum class Step : std::uint8_t { L, R };

/// Path from a root to a vertex; the first step is the one taken at the root.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  const std::vector<Step>& steps() const { return steps_; }

  void push_back(Step s) { steps_.push_back(s); }
  void reverse();

  auto begin() const { return steps_.begin(); }
  auto end() const { return steps_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Step> steps_;
};

/// Vertex j (1-based) of row n.
struct TreeAddress {
  std::size_t row = 0;
  Integer index = 1;

  friend bool operator==(const TreeAddress&, const TreeAddress&) = default;
};

/// j-1 as an n-bit numeral, most significant bit first, 0 -> L, 1 -> R.
/// Throws IndexOutOfRange unless 1 <= j <= 2^n.
Word index_to_word(const TreeAddress& addr);
TreeAddress word_to_index(const Word& w);

Plft vertex_at(const Plft& root, const Word& w);

struct Located {
  Plft root;
  Word word;
};

/// Climbs parents to the orphan root of f's tree.
Located locate(const Plft& f);

/// Next vertex on the same row: 1/(2[f] + 1 - f) = [c d; (2q+1)c-a (2q+1)d-b].
/// Throws UndefinedPart for an orphan and NoSuccessor when an entry would be
/// negative or the determinant would vanish.
Plft successor(const Plft& f);

/// Streams row n of T(root) left to right with O(1) state.
class RowStream {
 public:
  RowStream(Plft root, std::size_t n);

  /// w_{n,j} for the next j, or nullopt after 2^n vertices.
  std::optional<Plft> next();

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
  Integer remaining_;
  std::optional<Plft> current_;
};

inline RowStream row_iter(const Plft& root, std::size_t n) { return RowStream(root, n); }

/// Default cap on rows that may be fully materialized.
inline constexpr std::size_t kMaterializeCap = 26;

/// Row n of T(root) as a vector. Throws DepthCapExceeded when n > cap.
std::vector<Plft> row_vector(const Plft& root, std::size_t n,
                             std::size_t cap = kMaterializeCap);

/// Denominator of each vertex equals the numerator of the next, across row n.
bool check_den_num(const Plft& root, std::size_t n);

/// phi(w_{n,j}) == w_{n,2^n-j+1} across row n. Capped like row_vector.
bool symmetry_holds(const Plft& root, std::size_t n, std::size_t cap = kMaterializeCap);

/// (n, 2^n - j + 1). Throws IndexOutOfRange.
TreeAddress symmetry_partner(const TreeAddress& addr);

/// Unique word over {L1, R1} whose product is m. Throws NotDeterminantOne.
Word factor_sl2(const Plft& m);

// Rational Calkin-Wilf tree rooted at 1.

/// x/(x+1) and x+1 for x > 0. Throws NonPositive.
ReducedRational rational_left_child(const ReducedRational& x);
ReducedRational rational_right_child(const ReducedRational& x);

/// 1/(2⌊x⌋ + 1 - x).
ReducedRational rational_successor(const ReducedRational& x);

ReducedRational rational_vertex_at(const ReducedRational& root, const Word& w);

struct RationalLocated {
  ReducedRational root;
  Word word;
};

/// Parent chain up to 1. Throws NonPositive.
RationalLocated rational_locate(const ReducedRational& x);

/// Streams row n of the Calkin-Wilf tree via the successor formula.
class RationalRowStream {
 public:
  explicit RationalRowStream(std::size_t n);
  std::optional<ReducedRational> next();

 private:
  Integer remaining_;
  ReducedRational current_;
};

/// Results of the four row properties of T(z) over rows 0..rows, plus the
/// bridge w_{n,j}(1) = c_{n,j} to the rational tree.
struct FormulaReport {
  std::size_t rows = 0;
  bool den_num = true;
  bool symmetry = true;
  bool successor_matches_bfs = true;
  bool depth = true;
  bool rational_bridge = true;

  bool pass() const { return den_num && symmetry && successor_matches_bfs && depth && rational_bridge; }
};

/// Throws DepthCapExceeded when rows > cap.
FormulaReport verify_formulas(std::size_t rows, std::size_t cap = kMaterializeCap);

}  // namespace cwf
