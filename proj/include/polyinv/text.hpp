#pragma once

#include "polyinv/exppoly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace polyinv {

/// Renders f in the exp-poly grammar, e.g.
///   "1/2*x1^2 + 3*E(1)*x2*exp(<1,0>.x) - exp(<-1,0>.x)".
/// A coefficient with several formal-exponential terms is written as several
/// terms. The zero polynomial prints as "0".
std::string to_string(const ExpPoly& f);

/// Parses the exp-poly grammar:
///   expr   := [sign] term (sign term)*
///   term   := factor ('*' factor)*
///   factor := rational | 'E(' rational ')' | var ['^' int] | 'exp(<' rational {',' rational} '>.x)'
///   var    := 'x' int      (bare 'x' means x1)
/// Whitespace is insignificant. The dimension is the explicit `dim` if
/// given, otherwise the largest variable index or frequency length (1 for a
/// constant). Throws ParseError with the byte offset and expected tokens.
ExpPoly parse_exppoly(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

}  // namespace polyinv
