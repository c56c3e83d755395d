#include "cwf/treenav.hpp"

#include <algorithm>

#include "cwf/division.hpp"
#include "cwf/error.hpp"

namespace cwf {

void Word::reverse() { std::reverse(steps_.begin(), steps_.end()); }

namespace {

Integer power_of_two(std::size_t n) { return Integer(1) << n; }

void check_address(const TreeAddress& addr) {
  if (addr.index < 1 || addr.index > power_of_two(addr.row))
    throw Error(ErrorCode::IndexOutOfRange, "index outside 1..2^n");
}

}  // namespace

Word index_to_word(const TreeAddress& addr) {
  check_address(addr);
  const Integer bits = addr.index - 1;
  std::vector<Step> steps(addr.row);
  for (std::size_t i = 0; i < addr.row; ++i) {
    const std::size_t bit = addr.row - 1 - i;
    steps[i] = boost::multiprecision::bit_test(bits, bit) ? Step::R : Step::L;
  }
  return Word(std::move(steps));
}

TreeAddress word_to_index(const Word& w) {
  Integer bits = 0;
  for (Step s : w) {
    bits <<= 1;
    if (s == Step::R) bits |= 1;
  }
  return {w.size(), bits + 1};
}

Plft vertex_at(const Plft& root, const Word& w) {
  Plft f = root;
  for (Step s : w) f = s == Step::L ? left_child(f) : right_child(f);
  return f;
}

Located locate(const Plft& f) {
  Word word;
  Plft cur = f;
  const Integer bound = plft_height(f);
  for (Integer steps = 0;; ++steps) {
    if (steps > bound) throw Error(ErrorCode::NoParent, "parent chain exceeded the height bound");
    const ChildKind kind = classify(cur);
    if (kind == ChildKind::Orphan) break;
    word.push_back(kind == ChildKind::LeftChild ? Step::L : Step::R);
    cur = parent(cur);
  }
  word.reverse();
  return {std::move(cur), std::move(word)};
}

Plft successor(const Plft& f) {
  const Integer k = 2 * integer_part(f) + 1;
  Integer c2 = k * f.c() - f.a();
  Integer d2 = k * f.d() - f.b();
  if (c2 < 0 || d2 < 0 || (c2 == 0 && d2 == 0))
    throw Error(ErrorCode::NoSuccessor, "vertex has no successor on its row");
  return Plft(f.c(), f.d(), std::move(c2), std::move(d2));
}

RowStream::RowStream(Plft root, std::size_t n) : row_(n), remaining_(power_of_two(n)) {
  Plft first = std::move(root);
  for (std::size_t i = 0; i < n; ++i) first = left_child(first);
  current_ = std::move(first);
}

std::optional<Plft> RowStream::next() {
  if (remaining_ == 0) return std::nullopt;
  std::optional<Plft> out = current_;
  --remaining_;
  if (remaining_ > 0) current_ = successor(*current_);
  return out;
}

std::vector<Plft> row_vector(const Plft& root, std::size_t n, std::size_t cap) {
  if (n > cap) throw Error(ErrorCode::DepthCapExceeded, "row exceeds the materialization cap");
  std::vector<Plft> out;
  out.reserve(std::size_t{1} << n);
  RowStream stream(root, n);
  while (auto f = stream.next()) out.push_back(std::move(*f));
  return out;
}

bool check_den_num(const Plft& root, std::size_t n) {
  RowStream stream(root, n);
  std::optional<Plft> prev = stream.next();
  while (auto cur = stream.next()) {
    if (prev->denominator() != cur->numerator()) return false;
    prev = std::move(cur);
  }
  return true;
}

bool symmetry_holds(const Plft& root, std::size_t n, std::size_t cap) {
  const std::vector<Plft> row = row_vector(root, n, cap);
  for (std::size_t j = 0; j < row.size(); ++j)
    if (phi(row[j]) != row[row.size() - 1 - j]) return false;
  return true;
}

TreeAddress symmetry_partner(const TreeAddress& addr) {
  check_address(addr);
  return {addr.row, power_of_two(addr.row) - addr.index + 1};
}

Word factor_sl2(const Plft& m) {
  if (det(m) != 1) throw Error(ErrorCode::NotDeterminantOne, "factorization needs determinant 1");
  Located loc = locate(m);
  if (loc.root != Plft::identity())
    throw Error(ErrorCode::InvalidRoot, "determinant-1 matrix did not descend from I");
  return std::move(loc.word);
}

namespace {

void require_positive(const ReducedRational& x) {
  if (!x.is_positive()) throw Error(ErrorCode::NonPositive, "Calkin-Wilf tree holds positive rationals only");
}

}  // namespace

ReducedRational rational_left_child(const ReducedRational& x) {
  require_positive(x);
  return ReducedRational(x.num(), x.num() + x.den());
}

ReducedRational rational_right_child(const ReducedRational& x) {
  require_positive(x);
  return ReducedRational(x.num() + x.den(), x.den());
}

ReducedRational rational_successor(const ReducedRational& x) {
  require_positive(x);
  return (ReducedRational(2 * x.floor() + 1) - x).reciprocal();
}

ReducedRational rational_vertex_at(const ReducedRational& root, const Word& w) {
  ReducedRational x = root;
  for (Step s : w) x = s == Step::L ? rational_left_child(x) : rational_right_child(x);
  return x;
}

RationalLocated rational_locate(const ReducedRational& x) {
  require_positive(x);
  Word word;
  Integer a = x.num();
  Integer b = x.den();
  while (a != b) {
    if (a < b) {
      b -= a;
      word.push_back(Step::L);
    } else {
      a -= b;
      word.push_back(Step::R);
    }
  }
  word.reverse();
  return {ReducedRational(1), std::move(word)};
}

RationalRowStream::RationalRowStream(std::size_t n)
    : remaining_(power_of_two(n)), current_(1, static_cast<long long>(n) + 1) {}

std::optional<ReducedRational> RationalRowStream::next() {
  if (remaining_ == 0) return std::nullopt;
  ReducedRational out = current_;
  --remaining_;
  if (remaining_ > 0) current_ = rational_successor(current_);
  return out;
}

FormulaReport verify_formulas(std::size_t rows, std::size_t cap) {
  if (rows > cap) throw Error(ErrorCode::DepthCapExceeded, "rows exceed the materialization cap");
  FormulaReport report;
  report.rows = rows;
  const Plft root = Plft::identity();
  std::vector<Plft> bfs{root};
  for (std::size_t n = 0; n <= rows; ++n) {
    if (n > 0) {
      std::vector<Plft> next;
      next.reserve(2 * bfs.size());
      for (const Plft& f : bfs) {
        next.push_back(left_child(f));
        next.push_back(right_child(f));
      }
      bfs = std::move(next);
    }
    const std::vector<Plft> row = row_vector(root, n, cap);
    report.successor_matches_bfs = report.successor_matches_bfs && row == bfs;
    report.den_num = report.den_num && check_den_num(root, n);
    report.symmetry = report.symmetry && symmetry_holds(root, n, cap);
    RationalRowStream rational(n);
    for (const Plft& f : row) {
      report.depth = report.depth && depth_det1(f) == n;
      report.rational_bridge = report.rational_bridge && eval(f, ReducedRational(1)) == *rational.next();
    }
  }
  return report;
}

}  // namespace cwf
