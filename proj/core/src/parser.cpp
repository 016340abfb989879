#include <algorithm>
#include <utility>

#include "urset/dsl.hpp"

namespace urset::dsl {

namespace {

class Parser {
public:
  Parser(const std::vector<Token>& tokens, const std::vector<std::string>& atoms)
      : tokens_(tokens), atoms_(atoms) {}

  ExprPtr statement() {
    if (at_keyword("let")) {
      Token let_tok = advance();
      Token name = expect(TokenKind::identifier, "a name to bind");
      if (is_atom(name.lexeme))
        throw parse_error(name.span, "'" + name.lexeme + "' names an atom and cannot be rebound");
      expect_symbol("=");
      ExprPtr body = expr();
      Token e = expect_end();
      return node(Let{name.lexeme, body}, {let_tok.span.begin, e.span.begin});
    }
    ExprPtr e = expr();
    expect_end();
    return e;
  }

  ExprPtr expression() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

private:
  const std::vector<Token>& tokens_;
  const std::vector<std::string>& atoms_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;

  const Token& peek() const { return tokens_[pos_]; }

  Token advance() { return tokens_[pos_++]; }

  bool at_symbol(std::string_view s) const {
    return peek().kind == TokenKind::symbol && peek().lexeme == s;
  }

  bool at_keyword(std::string_view s) const {
    return peek().kind == TokenKind::keyword && peek().lexeme == s;
  }

  std::string describe(const Token& t) const {
    if (t.kind == TokenKind::end) return "end of input";
    return "'" + t.lexeme + "'";
  }

  Token expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind)
      throw parse_error(peek().span, "expected " + what + ", found " + describe(peek()));
    return advance();
  }

  Token expect_symbol(std::string_view s) {
    if (!at_symbol(s))
      throw parse_error(peek().span,
                        "expected '" + std::string(s) + "', found " + describe(peek()));
    return advance();
  }

  Token expect_end() {
    if (peek().kind != TokenKind::end)
      throw parse_error(peek().span, "expected end of input, found " + describe(peek()));
    return peek();
  }

  bool is_atom(const std::string& name) const {
    return std::find(atoms_.begin(), atoms_.end(), name) != atoms_.end();
  }

  bool is_bound(const std::string& name) const {
    return std::find(bound_.begin(), bound_.end(), name) != bound_.end();
  }

  static ExprPtr node(auto&& n, Span span) {
    return std::make_shared<Expr>(Expr{std::forward<decltype(n)>(n), span});
  }

  // expr := sum (("in" | "=" | "subset" | "<") sum)?   — non-associative
  ExprPtr expr() {
    ExprPtr lhs = sum();
    std::optional<Rel> op;
    if (at_keyword("in")) op = Rel::in;
    else if (at_symbol("=")) op = Rel::eq;
    else if (at_keyword("subset")) op = Rel::subset;
    else if (at_symbol("<")) op = Rel::less;
    if (!op) return lhs;
    advance();
    ExprPtr rhs = sum();
    if (at_keyword("in") || at_symbol("=") || at_keyword("subset") || at_symbol("<"))
      throw parse_error(peek().span, "relational operators do not chain");
    return node(RelOp{*op, lhs, rhs}, {lhs->span.begin, rhs->span.end});
  }

  ExprPtr sum() {
    ExprPtr lhs = prod();
    while (at_symbol("+")) {
      advance();
      ExprPtr rhs = prod();
      lhs = node(Add{lhs, rhs}, {lhs->span.begin, rhs->span.end});
    }
    return lhs;
  }

  ExprPtr prod() {
    ExprPtr lhs = unary();
    while (at_symbol("*")) {
      advance();
      ExprPtr rhs = unary();
      lhs = node(Mul{lhs, rhs}, {lhs->span.begin, rhs->span.end});
    }
    return lhs;
  }

  ExprPtr unary() {
    const Token& t = peek();
    if (t.kind == TokenKind::identifier && tokens_[pos_ + 1].kind == TokenKind::symbol &&
        tokens_[pos_ + 1].lexeme == "(")
      return call();
    return atom();
  }

  ExprPtr call() {
    Token name = advance();
    advance();  // '('
    const std::string& f = name.lexeme;
    ExprPtr result;
    if (f == "succ") {
      result = node(SuccOf{expr()}, {});
    } else if (f == "union") {
      result = node(UnionOf{expr()}, {});
    } else if (f == "pair" || f == "cup") {
      ExprPtr a = expr();
      expect_symbol(",");
      ExprPtr b = expr();
      result = f == "pair" ? node(PairOf{a, b}, {}) : node(CupOf{a, b}, {});
    } else if (f == "spec") {
      ExprPtr source = expr();
      expect_symbol(",");
      Token var = expect(TokenKind::identifier, "a binder name");
      expect_symbol("->");
      bound_.push_back(var.lexeme);
      ExprPtr pred = expr();
      bound_.pop_back();
      result = node(Spec{source, var.lexeme, pred}, {});
    } else if (f == "is_number" || f == "is_transitive" || f == "is_individual" ||
               f == "is_set") {
      Pred1 op = f == "is_number"       ? Pred1::is_number
                 : f == "is_transitive" ? Pred1::is_transitive
                 : f == "is_individual" ? Pred1::is_individual
                                        : Pred1::is_set;
      result = node(UnaryPred{op, expr()}, {});
    } else {
      throw parse_error(name.span, "unknown function '" + f + "'");
    }
    Token close = expect_symbol(")");
    return std::make_shared<Expr>(Expr{result->node, {name.span.begin, close.span.end}});
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::identifier: {
        Token id = advance();
        if (is_bound(id.lexeme)) return node(VarRef{id.lexeme}, id.span);
        if (is_atom(id.lexeme)) return node(AtomRef{id.lexeme}, id.span);
        return node(VarRef{id.lexeme}, id.span);
      }
      case TokenKind::integer: {
        Token lit = advance();
        return node(NumLit{std::stoull(lit.lexeme)}, lit.span);
      }
      case TokenKind::keyword:
        if (t.lexeme == "omega") {
          Token o = advance();
          return node(OrdLit{1, 0}, o.span);
        }
        break;
      case TokenKind::symbol:
        if (t.lexeme == "{") {
          Token open = advance();
          if (at_symbol("}"))
            throw parse_error(peek().span, "empty set literal is not allowed");
          std::vector<ExprPtr> elems;
          elems.push_back(expr());
          while (at_symbol(",")) {
            advance();
            elems.push_back(expr());
          }
          Token close = expect_symbol("}");
          return node(SetLit{std::move(elems)}, {open.span.begin, close.span.end});
        }
        if (t.lexeme == "(") {
          advance();
          ExprPtr inner = expr();
          expect_symbol(")");
          return inner;
        }
        break;
      default:
        break;
    }
    throw parse_error(t.span, "expected an expression, found " + describe(t));
  }
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens, const std::vector<std::string>& atoms) {
  return Parser(tokens, atoms).expression();
}

ExprPtr parse_statement(const std::vector<Token>& tokens,
                        const std::vector<std::string>& atoms) {
  return Parser(tokens, atoms).statement();
}

}  // namespace urset::dsl
