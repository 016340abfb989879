#pragma once

#include <cstdint>
#include <string>

#include "urset/naturals.hpp"

namespace urset {

// The symbolic ordinal ω·m + n. m = 0 embeds the natural number n; m ≥ 1 is
// transfinite and never materialized as a concrete set. The representation
// is canonical: two ordinals are equal iff their components are.
struct SymOrd {
  std::uint64_t omega_coeff = 0;  // m
  std::uint64_t offset = 0;       // n

  friend bool operator==(const SymOrd&, const SymOrd&) = default;
};

// ω itself: ω·1 + 0.
SymOrd omega();

// β ∪ {β}: the offset grows by one, the coefficient is untouched.
SymOrd succ_ord(SymOrd b);

// n + β = n ∪ β: absorbed entirely when β is transfinite; plain natural
// addition on offsets otherwise.
SymOrd add_nat_ord(std::uint64_t k, SymOrd b);
SymOrd add_nat_ord(const Nat& k, SymOrd b);

// β + (n+1) = (β + n) + 1, and β + 0 = β: the k-fold successor of β.
SymOrd add_ord_nat(SymOrd b, std::uint64_t k);
SymOrd add_ord_nat(SymOrd b, const Nat& k);

// The ordinal numbers with first number ω are exactly the ω + n, i.e. the
// ordinals with coefficient one.
bool is_ordinal_first_omega(SymOrd b);

// The first-number hierarchy ω·k; level 0 is the finite first number {p,q}.
SymOrd first_number_level(std::uint64_t k);

// Embedding between finite ordinals (m = 0) and the naturals. to_nat throws
// not_finite for a transfinite ordinal.
SymOrd from_nat(const Nat& n);
Nat to_nat(SymOrd b, const Alpha& alpha);

// Fully spelled components, e.g. "ω·1+0".
std::string to_string(SymOrd b);

}  // namespace urset
