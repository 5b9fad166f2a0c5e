#ifndef PRODMAKE_EXPR_HPP
#define PRODMAKE_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <prodmake/exactnum.hpp>
#include <prodmake/series.hpp>

namespace prodmake
{

// Series input language, a rational function in q:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' '-'? uint)?
//   base   := uint | 'q' | '(' expr ')' | '-' base
//
// Whitespace is ignored and there is no implicit multiplication. Unary minus
// is part of `base`, so "-q^2" means (-q)^2; write "-(q^2)" or "0-q^2" for the
// other reading.
struct ExprNode {
    enum class Kind { integer, variable, negate, add, subtract, multiply, divide, power };

    Kind kind = Kind::integer;
    BigInt value;               // integer
    std::int64_t exponent = 0;  // power
    std::vector<ExprNode> children;
    // Source span [begin, end) in the parsed text.
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Equality of the trees, ignoring source spans.
bool same_tree(const ExprNode &a, const ExprNode &b);

// Throws ParseError with the 0-based offset of the offending token.
ExprNode parse_expr(std::string_view text);

// Canonical text that parses back to the same tree.
std::string print_expr(const ExprNode &node);

// Taylor expansion to q^order. Throws EvaluationError (with the span of the
// offending subexpression) for a denominator or negatively powered base with
// zero constant term.
TruncatedSeries expand_expr(const ExprNode &node, std::size_t order);

} // namespace prodmake

#endif
