#include <utility>
#include <variant>

#include "urset/dsl.hpp"

namespace urset::dsl {

namespace {

// A value already known to be arithmetic: a finite number or a symbolic
// ordinal. Finite SymOrds are normalized into Nat.
using Arith = std::variant<Nat, SymOrd>;

class Evaluator {
public:
  Evaluator(const Env& env, const Alpha& alpha) : env_(env), alpha_(alpha) {}

  Value eval(const ExprPtr& e) {
    return std::visit([&](const auto& n) { return eval_node(n, e->span); }, e->node);
  }

private:
  const Env& env_;
  const Alpha& alpha_;

  [[noreturn]] static void type_error(Span span, const std::string& msg) {
    throw eval_error(span, msg);
  }

  Obj as_obj(Value v, Span span, const char* what) {
    if (auto* o = std::get_if<Obj>(&v)) return *o;
    if (auto* s = std::get_if<SymOrd>(&v)) {
      if (s->omega_coeff == 0 && s->offset <= kMaxMaterializedNumber)
        return from_int(s->offset, alpha_).value();
      type_error(span, std::string(what) + " requires an object, not the transfinite ordinal " +
                           urset::to_string(*s));
    }
    type_error(span, std::string(what) + " requires an object, not a boolean");
  }

  Arith as_arith(Value v, Span span, const char* what) {
    if (auto* s = std::get_if<SymOrd>(&v)) {
      if (s->omega_coeff == 0) return from_int(s->offset, alpha_);
      return *s;
    }
    if (auto* o = std::get_if<Obj>(&v)) {
      if (!is_number(*o, alpha_))
        type_error(span, std::string(what) + " requires a number, but " + urset::to_string(*o) +
                             " is not one");
      return Nat::make(*o, alpha_);
    }
    type_error(span, std::string(what) + " requires a number, not a boolean");
  }

  Value eval_node(const AtomRef& n, Span) { return Value(mk_individual(n.name)); }

  Value eval_node(const VarRef& n, Span span) {
    auto it = env_.find(n.name);
    if (it == env_.end()) throw eval_error(span, "unbound name '" + n.name + "'");
    return it->second;
  }

  Value eval_node(const NumLit& n, Span span) {
    if (n.value > kMaxMaterializedNumber)
      throw eval_error(span, "number literal exceeds the materialization bound (" +
                                 std::to_string(kMaxMaterializedNumber) + ")");
    return Value(from_int(n.value, alpha_).value());
  }

  Value eval_node(const OrdLit& n, Span) { return Value(SymOrd{n.omega_coeff, n.offset}); }

  Value eval_node(const SetLit& n, Span span) {
    std::vector<Obj> elems;
    elems.reserve(n.elems.size());
    for (const ExprPtr& e : n.elems)
      elems.push_back(as_obj(eval(e), e->span, "a set literal element"));
    return Value(wrap_kernel(span, [&] { return mk_set(elems); }));
  }

  Value eval_node(const UnionOf& n, Span span) {
    Obj s = as_obj(eval(n.arg), n.arg->span, "union");
    return Value(wrap_kernel(span, [&] { return union_of(s); }));
  }

  Value eval_node(const PairOf& n, Span span) {
    Obj a = as_obj(eval(n.lhs), n.lhs->span, "pair");
    Obj b = as_obj(eval(n.rhs), n.rhs->span, "pair");
    return Value(wrap_kernel(span, [&] { return pair(a, b); }));
  }

  Value eval_node(const CupOf& n, Span span) {
    Obj a = as_obj(eval(n.lhs), n.lhs->span, "cup");
    Obj b = as_obj(eval(n.rhs), n.rhs->span, "cup");
    return Value(wrap_kernel(span, [&] { return cup(a, b); }));
  }

  Value eval_node(const SuccOf& n, Span span) {
    Arith a = as_arith(eval(n.arg), n.arg->span, "succ");
    if (auto* nat = std::get_if<Nat>(&a))
      return Value(wrap_kernel(span, [&] { return succ(*nat).value(); }));
    return Value(succ_ord(std::get<SymOrd>(a)));
  }

  Value eval_node(const Add& n, Span span) {
    Arith lhs = as_arith(eval(n.lhs), n.lhs->span, "addition");
    Arith rhs = as_arith(eval(n.rhs), n.rhs->span, "addition");
    if (auto* a = std::get_if<Nat>(&lhs)) {
      if (auto* b = std::get_if<Nat>(&rhs))
        return Value(wrap_kernel(span, [&] { return add(*a, *b).value(); }));
      return Value(add_nat_ord(*a, std::get<SymOrd>(rhs)));  // n + β
    }
    if (auto* b = std::get_if<Nat>(&rhs))
      return Value(add_ord_nat(std::get<SymOrd>(lhs), *b));  // β + n
    type_error(span, "addition of two transfinite ordinals is not defined");
  }

  Value eval_node(const Mul& n, Span span) {
    Arith lhs = as_arith(eval(n.lhs), n.lhs->span, "multiplication");
    Arith rhs = as_arith(eval(n.rhs), n.rhs->span, "multiplication");
    if (std::holds_alternative<SymOrd>(lhs) || std::holds_alternative<SymOrd>(rhs))
      type_error(span, "multiplication is defined for numbers only");
    return Value(wrap_kernel(span, [&] {
      return mul(std::get<Nat>(lhs), std::get<Nat>(rhs)).value();
    }));
  }

  Value eval_node(const Spec& n, Span span) {
    Obj source = as_obj(eval(n.source), n.source->span, "spec");
    Predicate phi = [this, &n](const Obj& candidate) -> bool {
      Env inner = env_;
      inner.insert_or_assign(n.var, Value(candidate));
      Value r = Evaluator(inner, alpha_).eval(n.pred);
      if (!std::holds_alternative<bool>(r))
        throw eval_error(n.pred->span, "the predicate of spec must produce a boolean");
      return std::get<bool>(r);
    };
    return Value(wrap_kernel(span, [&] { return specification(source, phi); }));
  }

  Value eval_node(const RelOp& n, Span span) {
    Value lhs = eval(n.lhs);
    Value rhs = eval(n.rhs);
    switch (n.op) {
      case Rel::in:
        return Value(member(as_obj(lhs, n.lhs->span, "'in'"),
                            as_obj(rhs, n.rhs->span, "'in'")));
      case Rel::subset:
        return Value(subset(as_obj(lhs, n.lhs->span, "'subset'"),
                            as_obj(rhs, n.rhs->span, "'subset'")));
      case Rel::eq: {
        if (auto* a = std::get_if<SymOrd>(&lhs); a && a->omega_coeff >= 1) {
          if (auto* b = std::get_if<SymOrd>(&rhs)) return Value(*a == *b);
          return Value(false);  // no finite object equals a transfinite ordinal
        }
        if (auto* b = std::get_if<SymOrd>(&rhs); b && b->omega_coeff >= 1) {
          if (auto* a = std::get_if<SymOrd>(&lhs)) return Value(*a == *b);
          return Value(false);
        }
        if (std::holds_alternative<bool>(lhs) || std::holds_alternative<bool>(rhs))
          type_error(span, "'=' compares objects, not booleans");
        return Value(equal(as_obj(lhs, n.lhs->span, "'='"), as_obj(rhs, n.rhs->span, "'='")));
      }
      case Rel::less: {
        Arith a = as_arith(lhs, n.lhs->span, "'<'");
        Arith b = as_arith(rhs, n.rhs->span, "'<'");
        if (!std::holds_alternative<Nat>(a) || !std::holds_alternative<Nat>(b))
          type_error(span, "'<' is defined for numbers only");
        return Value(wrap_kernel(span, [&] { return lt(std::get<Nat>(a), std::get<Nat>(b)); }));
      }
    }
    type_error(span, "unreachable relational operator");
  }

  Value eval_node(const UnaryPred& n, Span) {
    Value v = eval(n.arg);
    if (auto* s = std::get_if<SymOrd>(&v); s && s->omega_coeff >= 1) {
      switch (n.op) {
        case Pred1::is_number: return Value(false);      // not a natural number
        case Pred1::is_transitive: return Value(true);   // every ω·m+n is transitive
        case Pred1::is_individual: return Value(false);
        case Pred1::is_set: return Value(true);
      }
    }
    Obj o = as_obj(v, n.arg->span, "the predicate");
    switch (n.op) {
      case Pred1::is_number: return Value(is_number(o, alpha_));
      case Pred1::is_transitive: return Value(is_transitive(o));
      case Pred1::is_individual: return Value(o.is_individual());
      case Pred1::is_set: return Value(o.is_set());
    }
    type_error(n.arg->span, "unreachable predicate");
  }

  Value eval_node(const Let& n, Span) { return eval(n.body); }

  template <typename F>
  auto wrap_kernel(Span span, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const kernel_error& ke) {
      throw eval_error(span, std::string(errc_name(ke.code())) + ": " + ke.what(), ke.code());
    }
  }
};

}  // namespace

Value eval(const ExprPtr& expr, const Env& env, const Alpha& alpha) {
  return Evaluator(env, alpha).eval(expr);
}

}  // namespace urset::dsl
