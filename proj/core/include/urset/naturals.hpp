#pragma once

#include <cstdint>
#include <string>

#include "urset/object.hpp"

namespace urset {

// The first number {p,q}: a two-element set of distinct individuals. It
// plays the role of zero; every natural number grows from it by successor.
class Alpha {
public:
  // {p,q} itself.
  const Obj& value() const noexcept { return value_; }

  // α ∪ {α}, cached for the recognizer (it is also the number one).
  const Obj& closure() const noexcept { return closure_; }

  const Obj& atom_p() const noexcept { return p_; }
  const Obj& atom_q() const noexcept { return q_; }

  friend bool operator==(const Alpha& a, const Alpha& b) noexcept {
    return a.value_ == b.value_;
  }

private:
  Alpha(Obj value, Obj closure, Obj p, Obj q);
  Obj value_, closure_, p_, q_;
  friend Alpha first_number(const Obj& p, const Obj& q);
};

// Validates {p,q} as the first number. Throws not_individuals if either
// argument is a set and equal_atoms if they coincide ({p,p} = p would be an
// individual, not a set).
Alpha first_number(const Obj& p, const Obj& q);

// The recognizer: X ∉ α, and every Y ∈ X ∪ {X} satisfies Y ∈ α ∪ {α} or
// (α ∈ Y and Y = ⋃Y ∪ {⋃Y}).
bool is_number(const Obj& x, const Alpha& alpha);

// A validated natural number: an ordinal number with first number alpha.
// Validation happens once at construction; derived constructions (succ,
// pred, add, ...) skip it in release builds and re-assert in debug.
class Nat {
public:
  // Validates and wraps; throws not_a_number when the recognizer rejects.
  static Nat make(const Obj& value, const Alpha& alpha);

  const Obj& value() const noexcept { return value_; }
  const Alpha& alpha() const noexcept { return alpha_; }

  friend bool operator==(const Nat& a, const Nat& b) noexcept {
    return a.value_ == b.value_;
  }

private:
  struct unchecked_t {};
  Nat(Obj value, Alpha alpha, unchecked_t);
  Obj value_;
  Alpha alpha_;
  friend Nat succ(const Nat&);
  friend Nat pred(const Nat&);
  friend Nat add(const Nat&, const Nat&);
  friend Nat mul(const Nat&, const Nat&);
  friend Nat from_int(std::uint64_t, const Alpha&);
};

// S ∪ {S}.
Nat succ(const Nat& s);

// ⋃S; the greatest number belonging to S. Throws first_number when S = α.
Nat pred(const Nat& s);

// a < b iff a ∈ b; a ≤ b iff b ∉ a.
bool lt(const Nat& a, const Nat& b);
bool leq(const Nat& a, const Nat& b);

enum class Cmp { less, equal, greater };

// Trichotomy: exactly one of a ∈ b, a = b, b ∈ a.
Cmp compare(const Nat& a, const Nat& b);

// The smallest / greatest number belonging to V. Every set member of V must
// be a number and at least one number must belong to V; individuals in V are
// harmless (the defining clauses ignore them). Throws not_a_set,
// non_number_set_member, no_number_member.
Nat smallest_number(const Obj& v, const Alpha& alpha);
Nat greatest_number(const Obj& v, const Alpha& alpha);

struct InductionReport {
  std::size_t step_instances = 0;  // step obligations Φ(X) → Φ(X∪{X}) tested
  bool conclusion_holds = false;   // Φ(T)
  bool theorem_violation = false;  // premises held yet Φ(T) failed; must never happen
};

// Bounded induction: requires S < T and the premises (a) Φ(S) and
// (b) Φ(X) → Φ(X∪{X}) for every X ∈ T with X ∉ S; then asserts Φ(T).
// Premise failures throw precondition_failed naming the clause and witness.
InductionReport induction_check(const Nat& s, const Nat& t, const Predicate& phi);

// a + 0 = a ∪ {p,q} and a + (b∪{b}) = (a+b) ∪ {a+b};
// a · 0 = 0 and a · (b∪{b}) = a·b + a. Both descend on b via pred.
Nat add(const Nat& a, const Nat& b);
Nat mul(const Nat& a, const Nat& b);

// Bridge to plain integers: to_int is the member count minus two, from_int
// the k-fold successor of α. They are mutually inverse.
std::uint64_t to_int(const Nat& s);
Nat from_int(std::uint64_t k, const Alpha& alpha);

}  // namespace urset
