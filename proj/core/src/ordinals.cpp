#include "urset/ordinals.hpp"

namespace urset {

SymOrd omega() { return SymOrd{1, 0}; }

SymOrd succ_ord(SymOrd b) { return SymOrd{b.omega_coeff, b.offset + 1}; }

SymOrd add_nat_ord(std::uint64_t k, SymOrd b) {
  if (b.omega_coeff >= 1) return b;  // n ∪ β = β
  return SymOrd{0, k + b.offset};
}

SymOrd add_nat_ord(const Nat& k, SymOrd b) { return add_nat_ord(to_int(k), b); }

SymOrd add_ord_nat(SymOrd b, std::uint64_t k) {
  for (std::uint64_t i = 0; i < k; ++i) b = succ_ord(b);
  return b;
}

SymOrd add_ord_nat(SymOrd b, const Nat& k) { return add_ord_nat(b, to_int(k)); }

bool is_ordinal_first_omega(SymOrd b) { return b.omega_coeff == 1; }

SymOrd first_number_level(std::uint64_t k) { return SymOrd{k, 0}; }

SymOrd from_nat(const Nat& n) { return SymOrd{0, to_int(n)}; }

Nat to_nat(SymOrd b, const Alpha& alpha) {
  if (b.omega_coeff != 0)
    fail(errc::not_finite, to_string(b) + " is not a natural number");
  return from_int(b.offset, alpha);
}

std::string to_string(SymOrd b) {
  return "ω·" + std::to_string(b.omega_coeff) + "+" + std::to_string(b.offset);
}

}  // namespace urset
