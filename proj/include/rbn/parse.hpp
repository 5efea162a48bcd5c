#pragma once

#include "rbn/chern.hpp"
#include "rbn/lattice.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbn {

/// Malformed user input; the message quotes the fragment that failed.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "F<e>", "blp2:k=<k>[:collinear=i,j,...][:points=x,y,z/...]", "blF<e>:k=<k>", "dp<degree>".
Surface parse_surface(std::string_view text);

/// Terms joined by + and -, each an optional positive integer times a basis symbol
/// (L, E, F, E1..E9; H is read as L). "0" is the zero class. Whitespace is ignored.
Divisor parse_divisor(const Surface& s, std::string_view text);

/// "r=<int>;c1=<divisor>;chi=<int>" or "r=<int>;c1=<divisor>;ch2=<rational>".
ChernCharacter parse_character(const Surface& s, std::string_view text);

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace rbn
