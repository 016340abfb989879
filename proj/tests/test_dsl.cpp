#include <cctype>
#include <variant>

#include "doctest.h"
#include "urset/checker.hpp"
#include "urset/dsl.hpp"

using namespace urset;
using namespace urset::dsl;

namespace {

const std::vector<std::string> kAtoms = {"p", "q"};

Alpha default_alpha() {
  return first_number(mk_individual("p"), mk_individual("q"));
}

Value eval_text(const std::string& text) {
  static Alpha alpha = default_alpha();
  Env env;
  return eval(parse(tokenize(text), kAtoms), env, alpha);
}

Obj obj_of(const Value& v) { return std::get<Obj>(v); }

}  // namespace

TEST_CASE("tokenize") {
  SUBCASE("set literal") {
    auto tokens = tokenize("{p, q}");
    REQUIRE(tokens.size() == 6);  // five tokens plus the end marker
    CHECK(tokens[0].kind == TokenKind::symbol);
    CHECK(tokens[1].kind == TokenKind::identifier);
    CHECK(tokens[1].lexeme == "p");
    CHECK(tokens[2].lexeme == ",");
    CHECK(tokens[3].lexeme == "q");
    CHECK(tokens[4].lexeme == "}");
    CHECK(tokens[5].kind == TokenKind::end);
  }
  SUBCASE("call and arithmetic") {
    auto tokens = tokenize("succ(0) + 1");
    REQUIRE(tokens.size() == 7);
    CHECK(tokens[0].lexeme == "succ");
    CHECK(tokens[2].kind == TokenKind::integer);
    CHECK(tokens[4].lexeme == "+");
    CHECK(tokens[5].kind == TokenKind::integer);
  }
  SUBCASE("lexical error with position") {
    try {
      tokenize("{p @ q}");
      FAIL("lexed '@'");
    } catch (const lex_error& e) {
      CHECK(e.span().begin == 3);
      CHECK(std::string(e.what()).find("'@'") != std::string::npos);
    }
  }
  SUBCASE("comments and spans") {
    auto tokens = tokenize("succ(1) # trailing note");
    REQUIRE(tokens.size() == 5);
    std::size_t last_end = 0;
    for (const Token& t : tokens) {
      if (t.kind == TokenKind::end) break;
      CHECK(t.span.begin >= last_end);  // non-overlapping
      CHECK(t.span.end <= 23);
      last_end = t.span.end;
    }
  }
  SUBCASE("spans cover the input minus whitespace and comments") {
    const std::string input = "  let x = {p, 12} # note";
    auto tokens = tokenize(input);
    std::size_t comment = input.find('#');
    for (std::size_t i = 0; i < comment; ++i) {
      if (std::isspace(static_cast<unsigned char>(input[i]))) continue;
      bool covered = false;
      for (const Token& t : tokens)
        if (t.span.begin <= i && i < t.span.end) { covered = true; break; }
      CHECK(covered);
    }
  }
}

TEST_CASE("error spans stay within the input") {
  for (const char* bad : {"{}", "{p @ q}", "succ(", "a = b = c", "pair(p q)", "frob(p)",
                          "omega omega", "1 +", ")", "spec({p,q}, x -> is_set(x))",
                          "unknown_name", "omega * 2", "99999"}) {
    std::string input = bad;
    try {
      Env env;
      static Alpha alpha = default_alpha();
      eval(parse(tokenize(input), kAtoms), env, alpha);
    } catch (const dsl_error& e) {
      CHECK(e.span().begin <= e.span().end);
      CHECK(e.span().end <= input.size());
    }
  }
}

TEST_CASE("parse") {
  SUBCASE("multiplication binds tighter than addition") {
    ExprPtr e = parse(tokenize("a + b * c"), kAtoms);
    const auto* top = std::get_if<Add>(&e->node);
    REQUIRE(top != nullptr);
    CHECK(std::holds_alternative<VarRef>(top->lhs->node));
    CHECK(std::holds_alternative<Mul>(top->rhs->node));
  }
  SUBCASE("empty set literal is refused") {
    try {
      parse(tokenize("{}"), kAtoms);
      FAIL("parsed {}");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find("empty set") != std::string::npos);
      CHECK(e.span().begin == 1);
    }
  }
  SUBCASE("spec binds its variable") {
    ExprPtr e = parse(tokenize("spec(S, x -> x in T)"), kAtoms);
    const auto* spec = std::get_if<Spec>(&e->node);
    REQUIRE(spec != nullptr);
    CHECK(spec->var == "x");
    const auto* rel = std::get_if<RelOp>(&spec->pred->node);
    REQUIRE(rel != nullptr);
    CHECK(rel->op == Rel::in);
    CHECK(std::get<VarRef>(rel->lhs->node).name == "x");
  }
  SUBCASE("declared atoms parse as atoms, unknown names as variables") {
    ExprPtr e = parse(tokenize("{p, x}"), kAtoms);
    const auto& lit = std::get<SetLit>(e->node);
    CHECK(std::holds_alternative<AtomRef>(lit.elems[0]->node));
    CHECK(std::holds_alternative<VarRef>(lit.elems[1]->node));
  }
  SUBCASE("relations do not chain") {
    CHECK_THROWS_AS(parse(tokenize("a = b = c"), kAtoms), parse_error);
  }
  SUBCASE("unknown function") {
    CHECK_THROWS_AS(parse(tokenize("frobnicate(p)"), kAtoms), parse_error);
  }
  SUBCASE("errors carry the offending position") {
    try {
      parse(tokenize("pair(p q)"), kAtoms);
      FAIL("missing comma accepted");
    } catch (const parse_error& e) {
      CHECK(e.span().begin == 7);
      CHECK(e.span().end <= 9);
    }
  }
}

TEST_CASE("eval") {
  Alpha alpha = default_alpha();
  SUBCASE("arithmetic on numbers") {
    CHECK(obj_of(eval_text("0 + 1")) == from_int(1, alpha).value());
    CHECK(obj_of(eval_text("2 * 3")) == from_int(6, alpha).value());
    CHECK(obj_of(eval_text("succ(succ(0))")) == from_int(2, alpha).value());
  }
  SUBCASE("mixed ordinal addition") {
    CHECK(std::get<SymOrd>(eval_text("5 + omega")) == omega());
    CHECK(std::get<SymOrd>(eval_text("omega + 3")) == SymOrd{1, 3});
    CHECK_THROWS_AS(eval_text("omega + omega"), eval_error);
    CHECK_THROWS_AS(eval_text("omega * 2"), eval_error);
  }
  SUBCASE("set construction") {
    CHECK(obj_of(eval_text("union({p,q})")) == alpha.value());
    CHECK(obj_of(eval_text("pair(p, q)")) == alpha.value());
    CHECK(obj_of(eval_text("cup({p,q}, {{p,q}})")) ==
          mk_set({mk_individual("p"), mk_individual("q"), alpha.value()}));
  }
  SUBCASE("relations and predicates") {
    CHECK(std::get<bool>(eval_text("p in {p,q}")));
    CHECK(std::get<bool>(eval_text("{p,q} = 0")));
    CHECK(std::get<bool>(eval_text("0 subset 2")));
    CHECK(std::get<bool>(eval_text("2 < 3")));
    CHECK_FALSE(std::get<bool>(eval_text("3 < 2")));
    CHECK(std::get<bool>(eval_text("is_number({p,q})")));
    CHECK(std::get<bool>(eval_text("is_individual(p)")));
    CHECK_FALSE(std::get<bool>(eval_text("is_transitive({{p,q}})")));
    CHECK(std::get<bool>(eval_text("is_set(omega)")));
    CHECK_FALSE(std::get<bool>(eval_text("is_number(omega)")));
    CHECK_FALSE(std::get<bool>(eval_text("omega = 5")));
  }
  SUBCASE("specification surfaces kernel errors with spans") {
    CHECK(obj_of(eval_text("spec({p, q, {p,q}}, x -> is_set(x))")) ==
          singleton(alpha.value()));
    try {
      eval_text("spec({p, q}, x -> is_set(x))");
      FAIL("no witness accepted");
    } catch (const eval_error& e) {
      REQUIRE(e.kernel_code().has_value());
      CHECK(*e.kernel_code() == errc::no_witness);
      CHECK(e.span().end <= std::string("spec({p, q}, x -> is_set(x))").size());
    }
  }
  SUBCASE("type errors") {
    CHECK_THROWS_AS(eval_text("p + 1"), eval_error);
    CHECK_THROWS_AS(eval_text("{omega}"), eval_error);
    CHECK_THROWS_AS(eval_text("omega < omega"), eval_error);
    CHECK_THROWS_AS(eval_text("spec({p,q}, x -> x)"), eval_error);
    CHECK_THROWS_AS(eval_text("1 = (1 = 1)"), eval_error);
  }
  SUBCASE("unbound names") {
    try {
      eval_text("succ(n)");
      FAIL("evaluated a free variable");
    } catch (const eval_error& e) {
      CHECK(std::string(e.what()).find("unbound name 'n'") != std::string::npos);
      CHECK(e.span().begin == 5);
    }
  }
  SUBCASE("bindings reach the evaluator") {
    Env env;
    env.emplace("n", Value(from_int(4, alpha).value()));
    Value v = eval(parse(tokenize("n + 1"), kAtoms), env, alpha);
    CHECK(obj_of(v) == from_int(5, alpha).value());
  }
  SUBCASE("literals beyond the materialization bound are refused") {
    CHECK_THROWS_AS(eval_text("5000"), eval_error);
  }
}

TEST_CASE("render") {
  Alpha alpha = default_alpha();
  Value one{from_int(1, alpha).value()};
  CHECK(render(one, RenderMode::raw, alpha) == "{p, q, {p, q}}");
  CHECK(render(one, RenderMode::abbreviated, alpha) == "1");
  CHECK(render(Value(omega()), RenderMode::abbreviated, alpha) == "ω");
  CHECK(render(Value(omega()), RenderMode::raw, alpha) == "ω·1+0");
  CHECK(render(Value(SymOrd{1, 3}), RenderMode::abbreviated, alpha) == "ω+3");
  CHECK(render(Value(SymOrd{2, 0}), RenderMode::abbreviated, alpha) == "ω·2");
  CHECK(render(Value(SymOrd{0, 7}), RenderMode::abbreviated, alpha) == "7");
  CHECK(render(Value(true), RenderMode::abbreviated, alpha) == "true");
  Value mixed{mk_set({mk_individual("p"), from_int(2, alpha).value()})};
  CHECK(render(mixed, RenderMode::abbreviated, alpha) == "{p, 2}");
}

TEST_CASE("raw canonical notation round-trips through the language") {
  Alpha alpha = default_alpha();
  check::UniverseSpec spec;
  spec.max_rank = 2;
  for (const Obj& o : check::enumerate_objects(spec)) {
    std::string source = to_string(o);
    Env env;
    Value v = eval(parse(tokenize(source), kAtoms), env, alpha);
    CHECK(obj_of(v) == o);
  }
}

TEST_CASE("no evaluation produces an empty set value") {
  // the kernel surfaces NoWitness / EmptySet instead
  CHECK_THROWS_AS(eval_text("spec({p,q}, x -> is_set(x))"), eval_error);
  for (const char* text : {"union({{p,q}})", "spec({p,q,{p,q}}, x -> is_individual(x))"}) {
    Value v = eval_text(text);
    CHECK(obj_of(v).width() >= 1);
  }
}
