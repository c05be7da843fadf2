#pragma once

#include <string>

#include "ncgeo/algebra.hpp"

namespace ncg {

/// Parses the CLI expression grammar into a normal-form element.
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := ('-' | '+')* power
///   power   := primary ('^' ['-'] INT)?
///   primary := INT ('/' INT)? | 'i' | 'q' | generator | '(' expr ')'
///
/// Generators: Z Zs W Ws X1..X4 AbsZ2 AbsW2. Negative powers are only
/// defined for q and, on the torus, for the unitary generators.
/// Raises ParseError with the offending position.
AlgebraElement parse_expression(const std::string& text, AlgebraId id);

}  // namespace ncg
