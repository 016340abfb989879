#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "urset/naturals.hpp"
#include "urset/ordinals.hpp"

namespace urset::dsl {

// Byte offsets into the source line, end exclusive.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class dsl_error : public std::runtime_error {
public:
  dsl_error(Span span, const std::string& what)
      : std::runtime_error(what), span_(span) {}
  Span span() const noexcept { return span_; }

private:
  Span span_;
};

class lex_error : public dsl_error {
  using dsl_error::dsl_error;
};

class parse_error : public dsl_error {
  using dsl_error::dsl_error;
};

class eval_error : public dsl_error {
public:
  eval_error(Span span, const std::string& what,
             std::optional<errc> kernel_code = std::nullopt)
      : dsl_error(span, what), kernel_code_(kernel_code) {}
  std::optional<errc> kernel_code() const noexcept { return kernel_code_; }

private:
  std::optional<errc> kernel_code_;
};

enum class TokenKind { identifier, integer, symbol, keyword, end };

struct Token {
  TokenKind kind;
  std::string lexeme;
  Span span;
};

// Full tokenization of one statement; throws lex_error with the position of
// the first unexpected character. '#' starts a comment running to the end.
std::vector<Token> tokenize(std::string_view input);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct AtomRef { std::string name; };
struct VarRef { std::string name; };
struct NumLit { std::uint64_t value = 0; };
struct OrdLit { std::uint64_t omega_coeff = 0; std::uint64_t offset = 0; };
struct SetLit { std::vector<ExprPtr> elems; };
struct UnionOf { ExprPtr arg; };
struct PairOf { ExprPtr lhs, rhs; };
struct CupOf { ExprPtr lhs, rhs; };
struct SuccOf { ExprPtr arg; };
struct Add { ExprPtr lhs, rhs; };
struct Mul { ExprPtr lhs, rhs; };
struct Spec { ExprPtr source; std::string var; ExprPtr pred; };

enum class Rel { in, eq, subset, less };
struct RelOp { Rel op; ExprPtr lhs, rhs; };

enum class Pred1 { is_number, is_transitive, is_individual, is_set };
struct UnaryPred { Pred1 op; ExprPtr arg; };

struct Let { std::string name; ExprPtr body; };

struct Expr {
  std::variant<AtomRef, VarRef, NumLit, OrdLit, SetLit, UnionOf, PairOf, CupOf,
               SuccOf, Add, Mul, Spec, RelOp, UnaryPred, Let>
      node;
  Span span;
};

// Parses one expression (no leading `let`). Identifiers naming a declared
// atom become AtomRef; spec binders shadow atoms inside their predicate.
ExprPtr parse(const std::vector<Token>& tokens, const std::vector<std::string>& atoms);

// Like parse but also accepts the statement form `let name = expr`.
ExprPtr parse_statement(const std::vector<Token>& tokens,
                        const std::vector<std::string>& atoms);

using Value = std::variant<Obj, SymOrd, bool>;
using Env = std::map<std::string, Value>;

// Numbers larger than this are refused by the evaluator; the canonical form
// of n carries n+2 members, so huge literals would be pure memory burn.
inline constexpr std::uint64_t kMaxMaterializedNumber = 4096;

// Evaluates with the kernel semantics; kernel failures surface as eval_error
// carrying the source span and the kernel error code. A `let` body evaluates
// to its value (the caller performs the binding).
Value eval(const ExprPtr& expr, const Env& env, const Alpha& alpha);

enum class RenderMode { raw, abbreviated };

// raw prints full canonical set notation; abbreviated folds recognized
// numbers to decimal and symbolic ordinals to "ω·m+n" with zero parts
// dropped. Deterministic.
std::string render(const Value& v, RenderMode mode, const Alpha& alpha);

}  // namespace urset::dsl
