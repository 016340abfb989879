#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urset/errors.hpp"

namespace urset {

namespace detail {
struct Node;
struct Access;
}  // namespace detail

// A canonical object of the theory: either an individual (a named atom whose
// sole member is itself) or a nonempty finite set. Canonical forms are
// interned, so extensional equality is pointer identity and objects are
// cheap to copy and safe to share across threads.
class Obj {
public:
  bool is_individual() const noexcept;
  bool is_set() const noexcept { return !is_individual(); }

  // Individuals only.
  const std::string& name() const;

  // Sets only; members in canonical order, duplicate-free.
  std::span<const Obj> members() const;

  // Number of members. An individual has exactly one member: itself.
  std::size_t width() const noexcept;

  // Nesting depth: 0 for individuals, 1 + max member depth for sets.
  std::size_t depth() const noexcept;

  // Identity of the canonical form; usable as a hash key.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Obj& a, const Obj& b) noexcept {
    return a.node_ == b.node_;
  }

private:
  explicit Obj(std::shared_ptr<const detail::Node> node);
  std::shared_ptr<const detail::Node> node_;
  friend struct detail::Access;
};

struct ObjHash {
  std::size_t operator()(const Obj& o) const noexcept {
    return std::hash<const void*>{}(o.id());
  }
};

// Total canonical order: individuals before sets; individuals by name;
// sets by member count, then lexicographically by member sequence.
std::strong_ordering canonical_order(const Obj& a, const Obj& b) noexcept;

struct CanonicalLess {
  bool operator()(const Obj& a, const Obj& b) const noexcept {
    return canonical_order(a, b) < 0;
  }
};

// An opaque total boolean-valued function on objects; the free variable of
// a specification formula.
using Predicate = std::function<bool(const Obj&)>;

// Constructs the individual with the given name; the same name always yields
// the same object. Throws invalid_name for an empty or malformed identifier.
Obj mk_individual(std::string_view name);

// Canonical set of the given elements: sorted, deduplicated, nonempty.
// {p} collapses to p itself when p is an individual. Throws empty_set when
// elems is empty.
Obj mk_set(std::span<const Obj> elems);
Obj mk_set(std::initializer_list<Obj> elems);

// u ∈ t. For an individual p, u ∈ p iff u = p.
bool member(const Obj& u, const Obj& t);

// Extensional equality; by canonicity this is identity of representations.
bool equal(const Obj& s, const Obj& t) noexcept;

// s ⊆ t: every member of s is a member of t.
bool subset(const Obj& s, const Obj& t);

// The object whose members are exactly s and t. pair(p,p) is p itself for
// an individual p, and {s} for a set s.
Obj pair(const Obj& s, const Obj& t);

// {s}: shorthand for pair(s, s).
Obj singleton(const Obj& s);

// ⋃s: the members of the members of s. An individual member contributes
// itself, so ⋃p = p for an individual p.
Obj union_of(const Obj& s);

// s ∪ t, defined as ⋃{s,t}.
Obj cup(const Obj& s, const Obj& t);

// ⋃s ⊆ s.
bool is_transitive(const Obj& s);

// The set of exactly those members u of s with phi(u). Throws not_a_set if
// s is an individual and no_witness if no member satisfies phi (the theory
// has no empty set to return).
Obj specification(const Obj& s, const Predicate& phi);

// A set member v of s none of whose members is a set member of s. Found by
// a descending walk, ties broken by canonical order. Throws not_a_set /
// no_set_member.
Obj regularity_witness(const Obj& s);

// Full canonical notation, e.g. "{p, q, {p, q}}".
std::string to_string(const Obj& o);

}  // namespace urset
