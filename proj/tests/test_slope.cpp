#include <catch2/catch_amalgamated.hpp>

#include "evasive/rng.hpp"
#include "evasive/slope.hpp"

using namespace evasive;
using gf::field_create;

namespace {

EvasiveVector random_vector(const TowerSpec& T, SplitMix64& rng) {
  EvasiveVector v = zero_vector(T);
  for (std::uint32_t i = 1; i <= T.height(); ++i)
    v.parts[i - 1] = static_cast<std::uint32_t>(rng.below(T.level(i).sup().size()));
  return v;
}

}  // namespace

TEST_CASE("restriction of a degenerate line is constant") {
  auto F9 = field_create(3, 2);
  TowerSpec T(F9, 2);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    EvasiveVector b = random_vector(T, rng);
    std::uint32_t u = static_cast<std::uint32_t>(rng.below(9));
    Poly f = line_restriction_poly(T, zero_vector(T), b, u);
    CHECK(f[0] == T.base().sub(class_label(T, b), u));
    CHECK(poly_degree(f) <= 0);
  }
}

TEST_CASE("restriction agrees pointwise with direct evaluation") {
  auto F4 = field_create(2, 2);
  TowerSpec T(F4, 3);
  SplitMix64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    EvasiveVector a = random_vector(T, rng);
    EvasiveVector b = random_vector(T, rng);
    std::uint32_t u = static_cast<std::uint32_t>(rng.below(4));
    Poly f = line_restriction_poly(T, a, b, u);
    for (std::uint32_t x = 0; x < 4; ++x)
      CHECK(poly_eval(T.base(), f, x) ==
            T.base().sub(class_label(T, scale_add(T, a, x, b)), u));
  }
}

TEST_CASE("leading coefficient is the norm of the top nonzero part") {
  auto F4 = field_create(2, 2);
  TowerSpec T(F4, 3);
  SplitMix64 rng(13);
  int nonzero_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    EvasiveVector a = random_vector(T, rng);
    EvasiveVector b = random_vector(T, rng);
    std::uint32_t u = static_cast<std::uint32_t>(rng.below(4));
    int top = -1;
    for (std::uint32_t i = 1; i <= 3; ++i)
      if (a.parts[i - 1] != 0) top = static_cast<int>(i);
    if (top < 0) continue;
    ++nonzero_cases;
    Poly f = line_restriction_poly(T, a, b, u);
    CHECK(poly_degree(f) == top);  // degree witness
    CHECK(f[top] == T.level(top).norm(a.parts[top - 1]));
  }
  CHECK(nonzero_cases > 90);
}

TEST_CASE("all-zero nonconstant coefficients solve to the zero slope") {
  auto F5 = field_create(5, 1);
  TowerSpec T(F5, 2);
  SplitMix64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    EvasiveVector b = random_vector(T, rng);
    std::uint32_t u = static_cast<std::uint32_t>(rng.below(5));
    Poly f{T.base().sub(class_label(T, b), u), 0, 0};
    EvasiveVector a = solve_slope(T, b, u, f);
    for (auto part : a.parts) CHECK(part == 0);
  }
}

TEST_CASE("slope solver round trip at the acceptance parameter sets") {
  struct Params {
    std::uint32_t p, e, t;
  };
  for (auto [p, e, t] : {Params{2, 2, 3}, Params{5, 1, 2}, Params{3, 2, 2}}) {
    auto F = field_create(p, e);
    TowerSpec T(F, t);
    const std::uint64_t q = F->size();
    SplitMix64 rng(1000 + q);
    for (int trial = 0; trial < 200; ++trial) {
      EvasiveVector b = random_vector(T, rng);
      std::uint32_t u = static_cast<std::uint32_t>(rng.below(q));
      Poly f(t + 1, 0);
      f[0] = T.base().sub(class_label(T, b), u);
      for (std::uint32_t d = 1; d <= t; ++d)
        f[d] = static_cast<std::uint32_t>(rng.below(q));
      EvasiveVector a = solve_slope(T, b, u, f);
      CHECK(line_restriction_poly(T, a, b, u) == f);
    }
  }
}

TEST_CASE("slope solver realizes prescribed subfield roots") {
  // Theorem-style targets over q = 9 with roots in F_3^*: the line meets the
  // class exactly at those roots.
  auto F3 = field_create(3, 1);
  auto F9 = field_create(3, 2);
  Extension sub(F3, F9);
  TowerSpec T(F9, 2);
  SplitMix64 rng(77);
  const std::uint32_t u = 0;
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    EvasiveVector b = random_vector(T, rng);
    std::uint32_t w = T.base().sub(class_label(T, b), u);
    if (w == 0) continue;  // b inside the class
    ++checked;
    std::uint32_t x1 = sub.embed(1), x2 = sub.embed(2);
    // c x1 x2 = w fixes the constant term (even degree, signs cancel).
    std::uint32_t c = F9->div(w, F9->mul(x1, x2));
    Poly f = poly_from_roots(*F9, c, {x1, x2});
    EvasiveVector a = solve_slope(T, b, u, f);
    CHECK(line_restriction_poly(T, a, b, u) == f);
    // Roots land in the class; other scalars stay outside.
    for (std::uint32_t x = 0; x < 9; ++x) {
      bool in_class = class_label(T, scale_add(T, a, x, b)) == u;
      CHECK(in_class == (x == x1 || x == x2));
    }
  }
  CHECK(checked > 60);
}

TEST_CASE("constant-term mismatch is rejected") {
  auto F5 = field_create(5, 1);
  TowerSpec T(F5, 2);
  EvasiveVector b = zero_vector(T);
  Poly f{1, 0, 0};  // label(b) - 0 = 0 != 1
  CHECK_THROWS_AS(solve_slope(T, b, 0, f), std::invalid_argument);
  Poly too_long{0, 0, 0, 1};
  CHECK_THROWS_AS(solve_slope(T, b, 0, too_long), std::invalid_argument);
}
