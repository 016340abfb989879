#include "urset/naturals.hpp"

#include <cassert>
#include <optional>
#include <utility>

namespace urset {

namespace {

void require_same_alpha(const Nat& a, const Nat& b) {
  if (!(a.alpha() == b.alpha()))
    fail(errc::mixed_alpha, "numbers built over different atom universes cannot be combined");
}

Obj obj_successor(const Obj& x) { return cup(x, singleton(x)); }

}  // namespace

Alpha::Alpha(Obj value, Obj closure, Obj p, Obj q)
    : value_(std::move(value)), closure_(std::move(closure)), p_(std::move(p)), q_(std::move(q)) {}

Alpha first_number(const Obj& p, const Obj& q) {
  if (!p.is_individual() || !q.is_individual())
    fail(errc::not_individuals, "a first number is a set of two individuals");
  if (p == q)
    fail(errc::equal_atoms, "{" + p.name() + "," + q.name() + "} collapses to an individual");
  Obj value = pair(p, q);
  Obj closure = obj_successor(value);
  return Alpha(std::move(value), std::move(closure), p, q);
}

bool is_number(const Obj& x, const Alpha& alpha) {
  const Obj& a = alpha.value();
  if (member(x, a)) return false;  // X ∉ {p,q}
  auto admissible = [&](const Obj& y) {
    if (member(y, alpha.closure())) return true;  // Y ∈ α ∪ {α}
    if (!member(a, y)) return false;              // α ∈ Y
    Obj u = union_of(y);
    return y == cup(u, singleton(u));             // Y = ⋃Y ∪ {⋃Y}
  };
  if (x.is_set()) {
    for (const Obj& y : x.members())
      if (!admissible(y)) return false;
  }
  return admissible(x);  // the {X} part of X ∪ {X}
}

Nat::Nat(Obj value, Alpha alpha, unchecked_t)
    : value_(std::move(value)), alpha_(std::move(alpha)) {
  assert(is_number(value_, alpha_));
}

Nat Nat::make(const Obj& value, const Alpha& alpha) {
  if (!is_number(value, alpha))
    fail(errc::not_a_number, to_string(value) + " is not an ordinal number with first number " +
                                 to_string(alpha.value()));
  return Nat(value, alpha, unchecked_t{});
}

Nat succ(const Nat& s) {
  return Nat(obj_successor(s.value()), s.alpha(), Nat::unchecked_t{});
}

Nat pred(const Nat& s) {
  if (s.value() == s.alpha().value())
    fail(errc::first_number, "the first number is not the successor of a number");
  return Nat(union_of(s.value()), s.alpha(), Nat::unchecked_t{});
}

bool lt(const Nat& a, const Nat& b) {
  require_same_alpha(a, b);
  return member(a.value(), b.value());
}

bool leq(const Nat& a, const Nat& b) {
  require_same_alpha(a, b);
  return !member(b.value(), a.value());
}

Cmp compare(const Nat& a, const Nat& b) {
  require_same_alpha(a, b);
  if (a.value() == b.value()) return Cmp::equal;
  if (member(a.value(), b.value())) return Cmp::less;
  assert(member(b.value(), a.value()));
  return Cmp::greater;
}

namespace {

// Shared scan for the smallest/greatest defining clauses. Validates the
// preconditions and returns the unique member satisfying the chosen clause.
Nat extremal(const Obj& v, const Alpha& alpha, bool smallest) {
  if (v.is_individual())
    fail(errc::not_a_set, "smallest/greatest apply to sets, not to " + to_string(v));
  bool has_number = false;
  for (const Obj& u : v.members()) {
    if (u.is_set()) {
      if (!is_number(u, alpha))
        fail(errc::non_number_set_member,
             to_string(u) + " is a set member but not a number");
      has_number = true;
    }
  }
  if (!has_number)
    fail(errc::no_number_member, "no number belongs to " + to_string(v));
  std::optional<Obj> found;
  for (const Obj& w : v.members()) {
    bool ok;
    if (smallest) {
      // set w ∈ V with ∀u (u ∈ V ∧ u ∉ u → u ∉ w)
      if (w.is_individual()) continue;
      ok = true;
      for (const Obj& u : v.members())
        if (!member(u, u) && member(u, w)) { ok = false; break; }
    } else {
      // z ∈ V with ∀u (u ∈ V → z ∉ u); individuals never qualify (z ∈ z)
      ok = true;
      for (const Obj& u : v.members())
        if (member(w, u)) { ok = false; break; }
    }
    if (ok) { found = w; break; }
  }
  assert(found.has_value());  // existence is a theorem given the preconditions
  return Nat::make(*found, alpha);
}

}  // namespace

Nat smallest_number(const Obj& v, const Alpha& alpha) { return extremal(v, alpha, true); }

Nat greatest_number(const Obj& v, const Alpha& alpha) { return extremal(v, alpha, false); }

InductionReport induction_check(const Nat& s, const Nat& t, const Predicate& phi) {
  require_same_alpha(s, t);
  if (!lt(s, t))
    fail(errc::precondition_failed, "induction requires S < T");
  if (!phi(s.value()))
    fail(errc::precondition_failed, "(a) fails: the formula does not hold at S = " + to_string(s.value()));
  InductionReport report;
  for (const Obj& x : t.value().members()) {
    if (member(x, s.value())) continue;  // X ∉ S
    if (!phi(x)) continue;
    ++report.step_instances;
    if (!phi(obj_successor(x)))
      fail(errc::precondition_failed, "(b) fails at X = " + to_string(x));
  }
  report.conclusion_holds = phi(t.value());
  report.theorem_violation = !report.conclusion_holds;
  return report;
}

namespace {

// Number of pred steps from b down to the first number.
std::size_t descend_to_zero(const Nat& b) {
  std::size_t steps = 0;
  for (Nat x = b; !(x.value() == x.alpha().value()); x = pred(x)) ++steps;
  return steps;
}

}  // namespace

Nat add(const Nat& a, const Nat& b) {
  require_same_alpha(a, b);
  std::size_t steps = descend_to_zero(b);
  // a + 0 = a ∪ {p,q}
  Obj acc = cup(a.value(), a.alpha().value());
  // a + (b ∪ {b}) = (a + b) ∪ {a + b}
  for (std::size_t i = 0; i < steps; ++i) acc = obj_successor(acc);
  return Nat(std::move(acc), a.alpha(), Nat::unchecked_t{});
}

Nat mul(const Nat& a, const Nat& b) {
  require_same_alpha(a, b);
  std::size_t steps_b = descend_to_zero(b);
  std::size_t steps_a = descend_to_zero(a);
  // a · 0 = 0
  Obj acc = a.alpha().value();
  // a · (b ∪ {b}) = a·b + a
  for (std::size_t i = 0; i < steps_b; ++i) {
    acc = cup(acc, a.alpha().value());
    for (std::size_t j = 0; j < steps_a; ++j) acc = obj_successor(acc);
  }
  return Nat(std::move(acc), a.alpha(), Nat::unchecked_t{});
}

std::uint64_t to_int(const Nat& s) { return s.value().width() - 2; }

Nat from_int(std::uint64_t k, const Alpha& alpha) {
  Nat acc(alpha.value(), alpha, Nat::unchecked_t{});
  for (std::uint64_t i = 0; i < k; ++i) acc = succ(acc);
  return acc;
}

}  // namespace urset
