#include "doctest.h"
#include "urset/ordinals.hpp"

using namespace urset;

namespace {

Alpha default_alpha() {
  return first_number(mk_individual("p"), mk_individual("q"));
}

}  // namespace

TEST_CASE("omega") {
  CHECK(omega() == SymOrd{1, 0});
  CHECK(is_ordinal_first_omega(omega()));
  CHECK(omega() == first_number_level(1));
}

TEST_CASE("symbolic successor") {
  CHECK(succ_ord(omega()) == SymOrd{1, 1});
  CHECK(succ_ord(SymOrd{2, 3}) == SymOrd{2, 4});
  Alpha a = default_alpha();
  for (std::uint64_t k = 0; k <= 10; ++k)
    CHECK(succ_ord(from_nat(from_int(k, a))) == from_nat(succ(from_int(k, a))));
}

TEST_CASE("left addition absorbs into a transfinite ordinal") {
  CHECK(add_nat_ord(5, omega()) == omega());
  for (std::uint64_t k = 0; k <= 10; ++k)
    for (std::uint64_t m = 1; m <= 3; ++m)
      for (std::uint64_t j = 0; j <= 10; ++j)
        CHECK(add_nat_ord(k, SymOrd{m, j}) == SymOrd{m, j});
  CHECK(add_nat_ord(2, SymOrd{0, 3}) == SymOrd{0, 5});  // finite case defers to the naturals
  Alpha a = default_alpha();
  CHECK(add_nat_ord(from_int(2, a), SymOrd{0, 3}) == SymOrd{0, 5});
}

TEST_CASE("right addition counts successors") {
  CHECK(add_ord_nat(omega(), 0) == omega());
  CHECK(add_ord_nat(omega(), 3) == SymOrd{1, 3});
  for (std::uint64_t b = 0; b <= 10; ++b) CHECK(add_ord_nat(SymOrd{2, b}, 0) == SymOrd{2, b});
  // injective in the added natural
  for (std::uint64_t j = 0; j <= 10; ++j)
    for (std::uint64_t k = 0; k <= 10; ++k)
      if (j != k) CHECK_FALSE(add_ord_nat(omega(), j) == add_ord_nat(omega(), k));
}

TEST_CASE("addition is not commutative beyond zero") {
  for (std::uint64_t k = 1; k <= 10; ++k)
    CHECK_FALSE(add_nat_ord(k, omega()) == add_ord_nat(omega(), k));
  CHECK(add_nat_ord(0, omega()) == add_ord_nat(omega(), 0));
}

TEST_CASE("ordinals with first number omega are exactly omega plus a natural") {
  CHECK(is_ordinal_first_omega(add_ord_nat(omega(), 7)));
  CHECK_FALSE(is_ordinal_first_omega(SymOrd{2, 0}));
  for (std::uint64_t m = 0; m <= 3; ++m)
    for (std::uint64_t n = 0; n <= 10; ++n)
      CHECK(is_ordinal_first_omega(SymOrd{m, n}) == (m == 1));
}

TEST_CASE("first number levels") {
  CHECK(first_number_level(0) == SymOrd{0, 0});
  CHECK(first_number_level(1) == omega());
  CHECK(first_number_level(3) == SymOrd{3, 0});
  Alpha a = default_alpha();
  CHECK(to_nat(first_number_level(0), a).value() == a.value());
}

TEST_CASE("embedding between finite ordinals and naturals") {
  Alpha a = default_alpha();
  for (std::uint64_t j = 0; j <= 10; ++j) {
    CHECK(to_int(to_nat(SymOrd{0, j}, a)) == j);
    CHECK(from_nat(from_int(j, a)) == SymOrd{0, j});
  }
  try {
    to_nat(omega(), a);
    FAIL("materialized omega");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::not_finite);
  }
}

TEST_CASE("canonicity: distinct components, distinct ordinals") {
  for (std::uint64_t m1 = 0; m1 <= 2; ++m1)
    for (std::uint64_t n1 = 0; n1 <= 5; ++n1)
      for (std::uint64_t m2 = 0; m2 <= 2; ++m2)
        for (std::uint64_t n2 = 0; n2 <= 5; ++n2)
          CHECK((SymOrd{m1, n1} == SymOrd{m2, n2}) == (m1 == m2 && n1 == n2));
}

TEST_CASE("peano transfer at first number omega") {
  // ω is no successor of a level-1 ordinal
  for (std::uint64_t k = 0; k <= 10; ++k)
    CHECK_FALSE(succ_ord(add_ord_nat(omega(), k)) == omega());
  // successor injective within the level
  for (std::uint64_t j = 0; j <= 10; ++j)
    for (std::uint64_t k = 0; k <= 10; ++k)
      if (succ_ord(add_ord_nat(omega(), j)) == succ_ord(add_ord_nat(omega(), k)))
        CHECK(j == k);
  // bounded induction over offsets
  auto phi = [](SymOrd b) { return is_ordinal_first_omega(b); };
  for (std::uint64_t t = 1; t <= 10; ++t) {
    bool base = phi(omega());
    bool steps = true;
    for (std::uint64_t k = 0; k < t; ++k)
      steps = steps && (!phi(add_ord_nat(omega(), k)) || phi(add_ord_nat(omega(), k + 1)));
    CHECK((!(base && steps) || phi(add_ord_nat(omega(), t))));
  }
}

TEST_CASE("rendering components") {
  CHECK(to_string(omega()) == "ω·1+0");
  CHECK(to_string(SymOrd{2, 3}) == "ω·2+3");
}
