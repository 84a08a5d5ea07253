#include <catch2/catch_amalgamated.hpp>

#include "evasive/field.hpp"

using evasive::gf::Field;
using evasive::gf::field_create;

namespace {

// Independent modulus oracle: enumerate monic polynomials of degree d over
// F_p in low-degree-first lexicographic coefficient order and return the
// first irreducible one, testing irreducibility by root search. Valid for
// d <= 3, where reducible implies a linear factor.
std::vector<std::uint32_t> first_irreducible_by_root_search(std::uint32_t p, std::uint32_t d) {
  REQUIRE(d >= 2);
  REQUIRE(d <= 3);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    std::vector<std::uint32_t> f(d + 1, 0);
    f[d] = 1;
    std::uint64_t v = rank;
    for (std::uint32_t k = d; k-- > 0;) {  // c_0 most significant
      f[k] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    bool has_root = false;
    for (std::uint32_t x = 0; x < p && !has_root; ++x) {
      std::uint64_t acc = 0;
      for (std::uint32_t k = d + 1; k-- > 0;) acc = (acc * x + f[k]) % p;
      has_root = acc == 0;
    }
    if (!has_root) return f;
  }
  FAIL("no irreducible polynomial found by oracle");
  return {};
}

}  // namespace

TEST_CASE("prime field uses the x - 0 modulus convention") {
  auto F3 = field_create(3, 1);
  CHECK(F3->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(F3->size() == 3);
  CHECK(F3->one() == 1);
}

TEST_CASE("canonical modulus matches the root-search oracle") {
  // Frozen values computed with the oracle below.
  CHECK(Field::canonical_modulus(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::canonical_modulus(2, 3) == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(Field::canonical_modulus(3, 2) == first_irreducible_by_root_search(3, 2));
  CHECK(Field::canonical_modulus(2, 3) == first_irreducible_by_root_search(2, 3));
  CHECK(Field::canonical_modulus(2, 2) == first_irreducible_by_root_search(2, 2));
  CHECK(Field::canonical_modulus(5, 2) == first_irreducible_by_root_search(5, 2));
  CHECK(Field::canonical_modulus(5, 3) == first_irreducible_by_root_search(5, 3));
  CHECK(Field::canonical_modulus(7, 2) == first_irreducible_by_root_search(7, 2));
}

TEST_CASE("modulus determinism") {
  Field a(3, 4), b(3, 4);
  CHECK(a.spec() == b.spec());
  CHECK(field_create(3, 4)->spec() == a.spec());
}

TEST_CASE("field_create rejects bad parameters") {
  CHECK_THROWS_AS(Field(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 40), evasive::CapError);  // 2^40 over the cap
}

TEST_CASE("additive identity and inverse law") {
  auto F9 = field_create(3, 2);
  for (std::uint32_t x = 0; x < 9; ++x) {
    CHECK(F9->add(x, 0) == x);
    CHECK(F9->add(x, F9->neg(x)) == 0);
  }
  auto F8 = field_create(2, 3);
  for (std::uint32_t x = 1; x < 8; ++x) CHECK(F8->mul(x, F8->inv(x)) == F8->one());
  CHECK_THROWS_AS(F8->inv(0), std::domain_error);
}

TEST_CASE("pow respects the multiplicative group order") {
  auto F9 = field_create(3, 2);
  for (std::uint32_t g = 1; g < 9; ++g) {
    CHECK(F9->pow(g, 8) == F9->one());
    CHECK(F9->pow(g, 9) == g);  // Frobenius-composed identity x^q = x on exponent q
  }
  CHECK(F9->pow(0, 0) == F9->one());
  CHECK(F9->pow(0, 5) == 0);
}

TEST_CASE("field axioms hold exhaustively on F_9") {
  auto F = field_create(3, 2);
  const std::uint32_t q = 9;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      for (std::uint32_t c = 0; c < q; ++c) {
        CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
  }
}

TEST_CASE("coefficient round trip and identities") {
  auto F = field_create(5, 3);
  CHECK(F->coeffs(0) == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(F->coeffs(F->one()) == std::vector<std::uint32_t>{1, 0, 0});
  for (std::uint32_t x = 0; x < F->size(); ++x) CHECK(F->from_coeffs(F->coeffs(x)) == x);
  CHECK_THROWS_AS(F->from_coeffs({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(F->from_coeffs({1, 2, 7}), std::invalid_argument);
}

TEST_CASE("rank order is coefficient-lexicographic order") {
  auto F = field_create(3, 2);
  // rank 1 = (0,1), rank 3 = (1,0): coefficient-lex puts (0,1) first.
  CHECK(F->coeffs(1) == std::vector<std::uint32_t>{0, 1});
  CHECK(F->coeffs(3) == std::vector<std::uint32_t>{1, 0});
  for (std::uint32_t x = 0; x + 1 < F->size(); ++x)
    CHECK(F->coeffs(x) < F->coeffs(x + 1));
}

TEST_CASE("prime power factoring") {
  CHECK(evasive::gf::factor_prime_power(9) == std::make_pair(3u, 2u));
  CHECK(evasive::gf::factor_prime_power(64) == std::make_pair(2u, 6u));
  CHECK(evasive::gf::factor_prime_power(7) == std::make_pair(7u, 1u));
  CHECK_THROWS_AS(evasive::gf::factor_prime_power(12), std::invalid_argument);
  CHECK_THROWS_AS(evasive::gf::factor_prime_power(1), std::invalid_argument);
}
