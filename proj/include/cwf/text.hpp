#pragma once

// Textual formats shared by the library and the CLI. Every printer has a
// parser that accepts its output; parsers throw Error(ParseError).

#include <string>
#include <string_view>
#include <vector>

#include "cwf/division.hpp"
#include "cwf/integer.hpp"
#include "cwf/linear_form.hpp"
#include "cwf/plft.hpp"
#include "cwf/rational.hpp"
#include "cwf/treenav.hpp"

namespace cwf {

Integer parse_integer(std::string_view s);

/// `n/d` or `n`, optional leading `-`.
std::string to_string(const ReducedRational& x);
ReducedRational parse_rational(std::string_view s);

/// `a*z+b` with `z` for a == 1 and the zero parts omitted, e.g. `z+2`, `3`, `2*z`.
std::string to_string(const LinearForm& f);
LinearForm parse_form(std::string_view s);

/// `[a b; c d]`.
std::string to_string(const Plft& f);
Plft parse_matrix(std::string_view s);

/// `(a*z+b)/(c*z+d)`.
std::string to_function_string(const Plft& f);

/// Compact rendering for figures: `z`, `z/(z+1)`, `z+1`, `1/(3*z)`.
std::string to_label(const Plft& f);

/// `[q0, q1; [a b; c d]]`, `[; [a b; c d]]` when there are no quotients.
std::string to_string(const ContinuedFraction& cf);
ContinuedFraction parse_cf(std::string_view s);
std::string to_string(const StandardForm& sf);

/// `[a0, a1, ..., ak]`.
std::string to_string(const std::vector<Integer>& quotients);

/// Letters `L`/`R`; the empty word is `e`.
std::string to_string(const Word& w);
Word parse_word(std::string_view s);

/// `n:j`.
std::string to_string(const TreeAddress& addr);
TreeAddress parse_address(std::string_view s);

std::string to_string(ChildKind kind);

}  // namespace cwf
