#pragma once

// Polynomial expressions over Q(i) in the variables x, y, z, s, t.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' INTEGER)?
//   atom   := INTEGER ('/' INTEGER)? | 'i' | VARIABLE | '(' expr ')'
//
// Whitespace is ignored. Multiplication is always explicit.

#include "edd/exactnum.hpp"
#include "edd/polyring/forms.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edd::cli {

class ParseError : public std::invalid_argument {
public:
    /// offset is 1-based; 0 when the error is not tied to a position.
    ParseError(std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct PolyExpr {
    enum class Kind { literal, variable, add, subtract, multiply, negate, power };

    Kind kind = Kind::literal;
    GaussianRational value;  // literal
    char variable = 0;       // one of x y z s t
    unsigned exponent = 0;   // power
    std::vector<PolyExpr> children;
};

inline constexpr unsigned kMaxExponent = 10000;

PolyExpr parse_poly(std::string_view text);

/// Conversion to forms. Throws ParseError (offset 0) when a variable from the
/// other family appears or the expression is not homogeneous.
TernaryForm to_ternary(const PolyExpr& expr);
BinaryForm to_binary(const PolyExpr& expr);
/// The value of a variable-free expression.
GaussianRational to_constant(const PolyExpr& expr);

}  // namespace edd::cli
