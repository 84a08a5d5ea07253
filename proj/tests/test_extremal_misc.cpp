#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "evasive/ap_free.hpp"
#include "evasive/awm.hpp"
#include "evasive/linear_rep.hpp"
#include "evasive/partition.hpp"
#include "evasive/rng.hpp"
#include "evasive/turan.hpp"

using namespace evasive;
using namespace evasive::extremal;
using gf::field_create;

TEST_CASE("turan envelope instantiations") {
  // t = 2, m = n: leading term is (n^2)^{2/3} = n^{4/3}
  auto env = turan_upper_bound(1000, 1000, 2);
  CHECK(env.term_lead == Catch::Approx(std::pow(1000.0, 4.0 / 3.0)));

  // m = n^{2/3}, t = 3: leading term cbrt(2) n^{10/9}
  std::uint64_t n = 1u << 18;
  std::uint64_t m = 1u << 12;  // n^{2/3} exactly
  auto env2 = turan_upper_bound(n, m, 3);
  CHECK(env2.term_lead ==
        Catch::Approx(std::cbrt(2.0) * std::pow(static_cast<double>(n), 10.0 / 9.0)));
  CHECK(env2.a == Catch::Approx(2.0 / 3.0));
  CHECK(env2.regime_ok);
  CHECK(env2.degree_split ==
        Catch::Approx(std::pow(static_cast<double>(n), 0.625) /
                      std::pow(static_cast<double>(m), 0.25)));

  CHECK_THROWS_AS(turan_upper_bound(10, 20, 2), std::invalid_argument);
  CHECK_THROWS_AS(turan_upper_bound(10, 5, 1), std::invalid_argument);
}

TEST_CASE("constructed graph stays below the envelope") {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 2);
  auto restricted = restrict_to_subspace(construct_class(T, 0).points, 3, 2, 3);
  geom::ProjectiveSpace pg(F3, 2);
  std::vector<std::uint64_t> S;
  for (auto r : restricted) S.push_back(pg.from_affine_rank(r));
  auto rep = linear_representation(pg, S);
  auto env = turan_upper_bound(rep.g.n_left, rep.g.n_right, 2);
  CHECK(static_cast<double>(rep.g.edge_count()) <= env.value);
}

TEST_CASE("lower bound parameter map") {
  auto p35 = lower_bound_parameters(3, 5);
  CHECK(p35.a == Fraction::reduced(2, 3));
  CHECK(p35.exponent == Fraction::reduced(10, 9));
  CHECK(p35.line_vertex_exp == 9);
  CHECK(p35.point_vertex_exp == 6);

  auto p2 = lower_bound_parameters(4, 2);
  CHECK(p2.a == Fraction::reduced(1, 1));
  CHECK(p2.exponent == Fraction::reduced(4, 3));

  auto p10 = lower_bound_parameters(4, 10);
  CHECK(p10.a == Fraction::reduced(11, 19));

  CHECK_THROWS_AS(lower_bound_parameters(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_parameters(3, 7), std::invalid_argument);  // binom(4,2) = 6
}

TEST_CASE("sum inequality equality cases") {
  IntMatrix ones(4, std::vector<std::int64_t>(5, 1));
  auto v = awm_check(ones);
  CHECK(v.holds);
  CHECK(v.equality);  // sigma^3 = (mn)^3 / ... both sides m^2 n^2 * mn

  IntMatrix zeros(3, std::vector<std::int64_t>(3, 0));
  auto z = awm_check(zeros);
  CHECK(z.holds);
  CHECK(z.equality);

  IntMatrix bad{{1, -1}};
  CHECK_THROWS_AS(awm_check(bad), std::invalid_argument);
}

TEST_CASE("sum inequality holds on random 0/1 matrices") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t m = 1 + rng.below(12), n = 1 + rng.below(12);
    IntMatrix B(m, std::vector<std::int64_t>(n, 0));
    for (auto& row : B)
      for (auto& x : row) x = static_cast<std::int64_t>(rng.below(2));
    CHECK(awm_check(B).holds);
  }
}

TEST_CASE("progression freeness of the evasive class") {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 2);
  auto cls = construct_class(T, 0);
  geom::AffineSpace S(F3, 3);
  auto verdict = is_ap_free(S, cls.points, 3);
  CHECK(verdict.free);
  CHECK(verdict.fast_path_certified);
  CHECK(verdict.exhaustive_ran);
  CHECK(cls.points.size() == 9);
}

TEST_CASE("a full line contains a p-term progression") {
  auto F3 = field_create(3, 1);
  geom::AffineSpace S(F3, 2);
  std::vector<std::uint32_t> line{0, 1, 2};  // the x_0 = 0 line
  auto verdict = is_ap_free(S, line, 3);
  CHECK_FALSE(verdict.free);
  CHECK_FALSE(verdict.fast_path_certified);
  REQUIRE(verdict.witness.has_value());
}

TEST_CASE("tiny sets are vacuously progression-free") {
  auto F5 = field_create(5, 1);
  geom::AffineSpace S(F5, 2);
  auto verdict = is_ap_free(S, {3, 17}, 3);
  CHECK(verdict.free);
  CHECK(verdict.vacuous);
}

TEST_CASE("progression parameter validation") {
  auto F9 = field_create(3, 2);
  geom::AffineSpace S9(F9, 2);
  CHECK_THROWS_AS(is_ap_free(S9, {0}, 2), std::invalid_argument);  // not a prime field
  auto F3 = field_create(3, 1);
  geom::AffineSpace S(F3, 2);
  CHECK_THROWS_AS(is_ap_free(S, {0}, 4), std::invalid_argument);  // t > p wraps
}

TEST_CASE("fast path and exhaustive path agree on random sets") {
  auto F3 = field_create(3, 1);
  geom::AffineSpace S(F3, 3);
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<std::uint32_t> pts;
    std::uint64_t size = 3 + rng.below(10);
    while (pts.size() < size) pts.insert(static_cast<std::uint32_t>(rng.below(27)));
    std::vector<std::uint32_t> v(pts.begin(), pts.end());
    auto verdict = is_ap_free(S, v, 3);
    if (verdict.fast_path_certified) CHECK(verdict.free);
  }
}
