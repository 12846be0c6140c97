#ifndef BGLAB_PARSER_HPP_
#define BGLAB_PARSER_HPP_

#include <string>
#include <string_view>

#include "bglab/expr.hpp"
#include "bglab/terms.hpp"

namespace bglab {

  // Grammar:
  //   identity := expr '=' expr
  //   expr     := '1' | factor+
  //   factor   := primary ('^' INT | "'")*
  //   primary  := VAR | '(' expr ')' | family
  //   VAR      := 'x' DIGITS ('_' DIGITS)*
  //   family   := 'v[' n ',' m ',' h ']' | 'u[' n ',' k ',' m ']' | 'w[' n ',' h ']'
  // Juxtaposition is the product, ' the star. Whitespace is insignificant
  // except inside tokens.

  //! Throws SyntaxError with the offending position.
  Expr     parse_expr(std::string_view text);
  Identity parse_identity(std::string_view text);

  //! Parses and expands to a flat term (within the word-length budget).
  Term parse_term(std::string_view text);

  //! "x1 x2 x1' x2'"; the unit prints as "1".
  std::string format_term(Term const& t);

}  // namespace bglab

#endif  // BGLAB_PARSER_HPP_
