#include "cwf/text.hpp"

#include <cctype>
#include <sstream>

#include "cwf/error.hpp"

namespace cwf {

namespace {

[[noreturn]] void fail(std::string_view what, std::string_view input) {
  throw Error(ErrorCode::ParseError, std::string(what) + ": '" + std::string(input) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_natural(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!all_digits(s)) fail("expected a nonnegative integer", context);
  return Integer(std::string(s));
}

// Splits on `sep` at bracket depth 0.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[' || s[i] == '(') ++depth;
    if (s[i] == ']' || s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string_view strip_brackets(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("expected [...]", context);
  return s.substr(1, s.size() - 2);
}

std::string integer_to_string(const Integer& x) { return x.str(); }

std::string join_quotients(const std::vector<Integer>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i > 0) out += ", ";
    out += integer_to_string(qs[i]);
  }
  return out;
}

}  // namespace

Integer parse_integer(std::string_view s) {
  const std::string_view input = s;
  s = trim(s);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail("expected an integer", input);
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

std::string to_string(const ReducedRational& x) {
  if (x.is_integer()) return integer_to_string(x.num());
  return integer_to_string(x.num()) + "/" + integer_to_string(x.den());
}

ReducedRational parse_rational(std::string_view s) {
  const std::string_view input = trim(s);
  const std::size_t slash = input.find('/');
  if (slash == std::string_view::npos) return ReducedRational(parse_integer(input));
  Integer num = parse_integer(input.substr(0, slash));
  Integer den = parse_natural(input.substr(slash + 1), input);
  if (den == 0) fail("zero denominator", input);
  return ReducedRational(std::move(num), std::move(den));
}

std::string to_string(const LinearForm& f) {
  if (f.a() == 0) return integer_to_string(f.b());
  std::string out = f.a() == 1 ? std::string("z") : integer_to_string(f.a()) + "*z";
  if (f.b() > 0) out += "+" + integer_to_string(f.b());
  return out;
}

LinearForm parse_form(std::string_view s) {
  const std::string_view input = trim(s);
  if (input.empty()) fail("empty linear form", input);
  Integer a = 0;
  Integer b = 0;
  bool seen_z = false;
  bool seen_const = false;
  for (std::string_view term : split_top(input, '+')) {
    term = trim(term);
    if (term.empty()) fail("empty term in linear form", input);
    if (term.back() == 'z') {
      if (seen_z) fail("repeated z term", input);
      seen_z = true;
      term.remove_suffix(1);
      term = trim(term);
      if (term.empty()) {
        a = 1;
      } else {
        if (term.back() != '*') fail("expected a*z", input);
        term.remove_suffix(1);
        a = parse_natural(term, input);
      }
    } else {
      if (seen_const) fail("repeated constant term", input);
      seen_const = true;
      b = parse_natural(term, input);
    }
  }
  return LinearForm(std::move(a), std::move(b));
}

std::string to_string(const Plft& f) {
  std::ostringstream out;
  out << '[' << f.a() << ' ' << f.b() << "; " << f.c() << ' ' << f.d() << ']';
  return out.str();
}

Plft parse_matrix(std::string_view s) {
  const std::string_view input = trim(s);
  const std::string_view body = strip_brackets(input, input);
  const std::vector<std::string_view> rows = split_top(body, ';');
  if (rows.size() != 2) fail("expected two matrix rows", input);
  std::vector<Integer> entries;
  for (std::string_view row : rows) {
    std::istringstream in{std::string(row)};
    std::string token;
    int count = 0;
    while (in >> token) {
      entries.push_back(parse_natural(token, input));
      ++count;
    }
    if (count != 2) fail("expected two entries per row", input);
  }
  return Plft(entries[0], entries[1], entries[2], entries[3]);
}

std::string to_function_string(const Plft& f) {
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

std::string to_label(const Plft& f) {
  std::string num = to_string(f.numerator());
  const std::string den = to_string(f.denominator());
  if (den == "1") return num;
  if (num.find('+') != std::string::npos) num = "(" + num + ")";
  if (den.find_first_of("+*") != std::string::npos) return num + "/(" + den + ")";
  return num + "/" + den;
}

std::string to_string(const ContinuedFraction& cf) {
  return "[" + join_quotients(cf.quotients) + "; " + to_string(cf.root) + "]";
}

std::string to_string(const StandardForm& sf) {
  return "[" + join_quotients(sf.quotients) + "; " + to_string(sf.tail) + "]";
}

ContinuedFraction parse_cf(std::string_view s) {
  const std::string_view input = trim(s);
  const std::string_view body = strip_brackets(input, input);
  const std::vector<std::string_view> parts = split_top(body, ';');
  if (parts.size() != 2) fail("expected quotients; root", input);
  std::vector<Integer> quotients;
  if (!trim(parts[0]).empty())
    for (std::string_view q : split_top(parts[0], ',')) quotients.push_back(parse_natural(q, input));
  return {std::move(quotients), parse_matrix(parts[1])};
}

std::string to_string(const std::vector<Integer>& quotients) { return "[" + join_quotients(quotients) + "]"; }

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  out.reserve(w.size());
  for (Step s : w) out += s == Step::L ? 'L' : 'R';
  return out;
}

Word parse_word(std::string_view s) {
  const std::string_view input = trim(s);
  Word w;
  if (input == "e") return w;
  if (input.empty()) fail("empty word (use 'e')", input);
  for (char ch : input) {
    if (ch == 'L') {
      w.push_back(Step::L);
    } else if (ch == 'R') {
      w.push_back(Step::R);
    } else {
      fail("word letters must be L or R", input);
    }
  }
  return w;
}

std::string to_string(const TreeAddress& addr) {
  return std::to_string(addr.row) + ":" + integer_to_string(addr.index);
}

TreeAddress parse_address(std::string_view s) {
  const std::string_view input = trim(s);
  const std::size_t colon = input.find(':');
  if (colon == std::string_view::npos) fail("expected n:j", input);
  Integer row = parse_natural(input.substr(0, colon), input);
  if (row > 1'000'000) fail("row too large", input);
  return {static_cast<std::size_t>(row), parse_natural(input.substr(colon + 1), input)};
}

std::string to_string(ChildKind kind) {
  switch (kind) {
    case ChildKind::LeftChild: return "left";
    case ChildKind::RightChild: return "right";
    case ChildKind::Orphan: return "orphan";
  }
  return "unknown";
}

}  // namespace cwf
