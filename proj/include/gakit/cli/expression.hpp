#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "gakit/blade.hpp"
#include "gakit/error.hpp"

// Multivector expression language.
//
//   expr   := binary chain over the levels below (loosest first), all left-associative
//     1: a + b   a - b
//     2: a | b                 scalar product
//     3: a << b  a >> b        left / right contraction
//     4: a % b   a * b         Clifford product, scaling by a scalar operand
//     5: a ^ b                 exterior product
//   unary  := ~u (reverse)  !u (grade involution)  *u (Hodge dual)  -u (negation)  | primary
//   primary:= number | e<k> (1-based basis vector) | ( expr )
//
// A number immediately followed by 'e' and digits is read as an exponent ("2e1" is 20);
// write "2*e1" for a scaled basis vector.
namespace gakit::cli {

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

enum class UnaryOp { reverse, grade_involution, hodge, negate };
enum class BinaryOp { add, subtract, scalar_product, contract_left, contract_right, clifford, scale, wedge };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  double value;
};
struct BasisSymbol {
  int index;
};
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<Number, BasisSymbol, Unary, Binary> node;
};

ExprPtr make_number(double v);
ExprPtr make_basis(int index);
ExprPtr make_unary(UnaryOp op, ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);

/// Structural equality (numbers compared exactly).
bool same_tree(const Expr& a, const Expr& b);

int precedence(BinaryOp op) noexcept;
std::string_view symbol(BinaryOp op) noexcept;
std::string_view symbol(UnaryOp op) noexcept;

/// Basis indices above max_index are rejected with a ParseError.
ExprPtr parse(std::string_view source, int max_index = kMaxDim);

/// Source text that parses back to the same tree; parentheses only where needed.
std::string print(const Expr& e);

} // namespace gakit::cli
