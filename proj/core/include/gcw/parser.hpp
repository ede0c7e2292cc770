#pragma once

// Lexer and recursive-descent parser for the Guarded Commands surface syntax.
//
// Surface conventions: `->` for the guard arrow, `[]` for choice, `!` both as
// boolean negation (prefix) and channel output (after a name in command
// position), `&`/`|` strict conjunction/disjunction, `&&`/`||` short-circuit,
// `#` postfix array length, `//` comments to end of line.
//
// Two dialects share the AST: the plain dialect allows channel actions and
// rejects `san`/string literals; the security dialect is the other way round.

#include <string_view>

#include "gcw/ast.hpp"

namespace gcw {

enum class Dialect { Plain, Security };

CommandPtr parse_program(std::string_view text, Dialect dialect = Dialect::Plain);

AexpPtr parse_aexp(std::string_view text, Dialect dialect = Dialect::Plain);
BexpPtr parse_bexp(std::string_view text, Dialect dialect = Dialect::Plain);

}  // namespace gcw
