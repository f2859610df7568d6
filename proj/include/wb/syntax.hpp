#ifndef WB_SYNTAX_HPP
#define WB_SYNTAX_HPP

#include <cstddef>
#include <string>

#include "wb/formula.hpp"

namespace wb {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Grammar (ASCII, UTF-8 identifiers pass through):
//   implication := disjunct ('->' implication)?
//   disjunct    := conjunct ('|' conjunct)*
//   conjunct    := unary ('&' unary)*
//   unary       := '~' unary | quantifier | primary
//   quantifier  := ('forall' | 'exists') var '.' implication
//   primary     := 'true' | 'false' | '(' formula ')'
//               |  ident [ '(' var (',' var)* ')' ]          (prop / first-order)
//               |  var ('in' | '=') var                      (set-theoretic)
// Quantifiers scope maximally to the right; '~' binds tightest, '->' loosest
// and associates to the right.
Formula parse_formula(const std::string& text, Lang lang);

// Inverse of parse_formula up to whitespace: parse(render(f), f.lang()) == f.
std::string render_formula(const Formula& f);

}  // namespace wb

#endif
