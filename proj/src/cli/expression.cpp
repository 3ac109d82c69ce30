#include "gakit/cli/expression.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace gakit::cli {

ExprPtr make_number(double v) { return std::make_shared<const Expr>(Expr{Number{v}}); }
ExprPtr make_basis(int index) { return std::make_shared<const Expr>(Expr{BasisSymbol{index}}); }
ExprPtr make_unary(UnaryOp op, ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Unary{op, std::move(operand)}});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* na = std::get_if<Number>(&a.node)) return na->value == std::get<Number>(b.node).value;
  if (const auto* ba = std::get_if<BasisSymbol>(&a.node)) return ba->index == std::get<BasisSymbol>(b.node).index;
  if (const auto* ua = std::get_if<Unary>(&a.node)) {
    const auto& ub = std::get<Unary>(b.node);
    return ua->op == ub.op && same_tree(*ua->operand, *ub.operand);
  }
  const auto& xa = std::get<Binary>(a.node);
  const auto& xb = std::get<Binary>(b.node);
  return xa.op == xb.op && same_tree(*xa.lhs, *xb.lhs) && same_tree(*xa.rhs, *xb.rhs);
}

int precedence(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::add:
    case BinaryOp::subtract: return 1;
    case BinaryOp::scalar_product: return 2;
    case BinaryOp::contract_left:
    case BinaryOp::contract_right: return 3;
    case BinaryOp::clifford:
    case BinaryOp::scale: return 4;
    case BinaryOp::wedge: return 5;
  }
  return 0;
}

std::string_view symbol(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::subtract: return "-";
    case BinaryOp::scalar_product: return "|";
    case BinaryOp::contract_left: return "<<";
    case BinaryOp::contract_right: return ">>";
    case BinaryOp::clifford: return "%";
    case BinaryOp::scale: return "*";
    case BinaryOp::wedge: return "^";
  }
  return "?";
}

std::string_view symbol(UnaryOp op) noexcept {
  switch (op) {
    case UnaryOp::reverse: return "~";
    case UnaryOp::grade_involution: return "!";
    case UnaryOp::hodge: return "*";
    case UnaryOp::negate: return "-";
  }
  return "?";
}

namespace {

enum class TokenKind { number, basis, op, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
  int index = 0;
};

class Lexer {
public:
  Lexer(std::string_view src, int max_index) : src_(src), max_index_(max_index) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {TokenKind::end, start, {}};
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_symbol(start);
    if (c == '(') return single(TokenKind::lparen, start);
    if (c == ')') return single(TokenKind::rparen, start);
    if ((c == '<' || c == '>') && pos_ + 1 < src_.size() && src_[pos_ + 1] == c) {
      pos_ += 2;
      return {TokenKind::op, start, src_.substr(start, 2)};
    }
    switch (c) {
      case '+': case '-': case '|': case '%': case '*': case '^': case '~': case '!':
        return single(TokenKind::op, start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

private:
  Token single(TokenKind kind, std::size_t start) {
    ++pos_;
    return {kind, start, src_.substr(start, 1)};
  }

  Token lex_number(std::size_t start) {
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return pos_ - from;
    };
    std::size_t count = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) throw ParseError("malformed number", start);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    Token t{TokenKind::number, start, src_.substr(start, pos_ - start)};
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) throw ParseError("malformed number", start);
    return t;
  }

  Token lex_symbol(std::size_t start) {
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);
    const bool basis_like = word.size() >= 2 && word[0] == 'e' &&
                            word.substr(1).find_first_not_of("0123456789") == std::string_view::npos;
    if (!basis_like) throw ParseError("unknown symbol '" + std::string(word) + "'", start);
    int index = 0;
    const auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), index);
    if (ec != std::errc() || index < 1 || index > max_index_) {
      throw ParseError("basis index out of range in '" + std::string(word) + "' (allowed 1.." +
                           std::to_string(max_index_) + ")",
                       start);
    }
    Token t{TokenKind::basis, start, word};
    t.index = index;
    return t;
  }

  std::string_view src_;
  int max_index_;
  std::size_t pos_ = 0;
};

std::optional<BinaryOp> binary_of(const Token& t) {
  if (t.kind != TokenKind::op) return std::nullopt;
  if (t.text == "+") return BinaryOp::add;
  if (t.text == "-") return BinaryOp::subtract;
  if (t.text == "|") return BinaryOp::scalar_product;
  if (t.text == "<<") return BinaryOp::contract_left;
  if (t.text == ">>") return BinaryOp::contract_right;
  if (t.text == "%") return BinaryOp::clifford;
  if (t.text == "*") return BinaryOp::scale;
  if (t.text == "^") return BinaryOp::wedge;
  return std::nullopt;
}

std::optional<UnaryOp> unary_of(const Token& t) {
  if (t.kind != TokenKind::op) return std::nullopt;
  if (t.text == "~") return UnaryOp::reverse;
  if (t.text == "!") return UnaryOp::grade_involution;
  if (t.text == "*") return UnaryOp::hodge;
  if (t.text == "-") return UnaryOp::negate;
  return std::nullopt;
}

// Precedence climbing over the binary levels.
class Parser {
public:
  Parser(std::string_view src, int max_index) : lexer_(src, max_index) { advance(); }

  ExprPtr parse_all() {
    ExprPtr e = parse_binary(1);
    if (current_.kind == TokenKind::rparen) throw ParseError("unbalanced ')'", current_.offset);
    if (current_.kind != TokenKind::end) throw ParseError("unexpected token '" + std::string(current_.text) + "'", current_.offset);
    return e;
  }

private:
  void advance() { current_ = lexer_.next(); }

  ExprPtr parse_binary(int min_prec) {
    ExprPtr lhs = parse_unary();
    for (;;) {
      const auto op = binary_of(current_);
      if (!op) {
        if (current_.kind == TokenKind::op) throw ParseError("unexpected operator '" + std::string(current_.text) + "'", current_.offset);
        break;
      }
      const int prec = precedence(*op);
      if (prec < min_prec) break;
      advance();
      ExprPtr rhs = parse_binary(prec + 1);
      lhs = make_binary(*op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (const auto op = unary_of(current_)) {
      advance();
      return make_unary(*op, parse_unary());
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const Token t = current_;
    switch (t.kind) {
      case TokenKind::number:
        advance();
        return make_number(t.number);
      case TokenKind::basis:
        advance();
        return make_basis(t.index);
      case TokenKind::lparen: {
        advance();
        ExprPtr inner = parse_binary(1);
        if (current_.kind != TokenKind::rparen) throw ParseError("unbalanced '(' opened", t.offset);
        advance();
        return inner;
      }
      case TokenKind::rparen: throw ParseError("unbalanced ')'", t.offset);
      case TokenKind::end: throw ParseError("unexpected end of input", t.offset);
      case TokenKind::op: throw ParseError("operator '" + std::string(t.text) + "' is missing its left operand", t.offset);
    }
    throw ParseError("unexpected token", t.offset);
  }

  Lexer lexer_;
  Token current_{TokenKind::end, 0, {}};
};

void print_into(const Expr& e, std::string& out);

void print_operand(const Expr& e, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  print_into(e, out);
  if (parenthesize) out += ')';
}

void print_into(const Expr& e, std::string& out) {
  if (const auto* n = std::get_if<Number>(&e.node)) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, n->value);
    out.append(buf, res.ptr);
  } else if (const auto* b = std::get_if<BasisSymbol>(&e.node)) {
    out += 'e';
    out += std::to_string(b->index);
  } else if (const auto* u = std::get_if<Unary>(&e.node)) {
    out += symbol(u->op);
    print_operand(*u->operand, std::holds_alternative<Binary>(u->operand->node), out);
  } else {
    const auto& x = std::get<Binary>(e.node);
    const int prec = precedence(x.op);
    const auto* l = std::get_if<Binary>(&x.lhs->node);
    const auto* r = std::get_if<Binary>(&x.rhs->node);
    print_operand(*x.lhs, l && precedence(l->op) < prec, out);
    out += ' ';
    out += symbol(x.op);
    out += ' ';
    print_operand(*x.rhs, r && precedence(r->op) <= prec, out);
  }
}

} // namespace

ExprPtr parse(std::string_view source, int max_index) { return Parser(source, max_index).parse_all(); }

std::string print(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

} // namespace gakit::cli
