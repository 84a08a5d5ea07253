#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "evasive/partition.hpp"

using namespace evasive;
using gf::field_create;

TEST_CASE("class label degenerate cases") {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 2);
  CHECK(class_label(T, zero_vector(T)) == 0);
  for (std::uint32_t v1 = 0; v1 < 3; ++v1) {
    EvasiveVector v = zero_vector(T);
    v.parts[0] = v1;
    CHECK(class_label(T, v) == v1);  // only the linear part survives
  }
}

TEST_CASE("labels are balanced: every value hit q^{dim-1} times") {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 2);
  std::vector<std::uint32_t> hits(3, 0);
  for (std::uint64_t fr = 0; fr < 27; ++fr) ++hits[class_label(T, from_flat_rank(T, fr))];
  CHECK(hits == std::vector<std::uint32_t>{9, 9, 9});
}

TEST_CASE("flat rank round trip covers the space") {
  auto F4 = field_create(2, 2);
  TowerSpec T(F4, 2);
  std::set<std::uint64_t> seen;
  for (std::uint64_t fr = 0; fr < 64; ++fr) {
    EvasiveVector v = from_flat_rank(T, fr);
    CHECK(flat_rank(T, v) == fr);
    seen.insert(fr);
    CHECK(flat_coords(T, v).size() == T.flat_dim());
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("class sizes match q^{dim-1}") {
  auto F3 = field_create(3, 1);
  TowerSpec T3(F3, 2);
  CHECK(construct_class(T3, 0).points.size() == 9);

  auto F4 = field_create(2, 2);
  TowerSpec T4(F4, 2);
  CHECK(construct_class(T4, 0).points.size() == 16);
}

TEST_CASE("classes are the label fibers, sorted and disjoint") {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 2);
  auto part = construct_partition(T);
  REQUIRE(part.classes.size() == 3);
  std::set<std::uint32_t> all;
  for (std::uint32_t u = 0; u < 3; ++u) {
    const auto& cls = part.classes[u];
    CHECK(cls.points.size() == 9);
    CHECK(std::is_sorted(cls.points.begin(), cls.points.end()));
    for (auto r : cls.points) {
      CHECK(class_label(T, from_flat_rank(T, r)) == u);
      all.insert(r);
    }
  }
  CHECK(all.size() == 27);  // disjoint union is the full space
}

TEST_CASE("partition over F_5") {
  auto F5 = field_create(5, 1);
  TowerSpec T(F5, 2);
  auto part = construct_partition(T);
  REQUIRE(part.classes.size() == 5);
  std::uint64_t total = 0;
  for (const auto& cls : part.classes) {
    CHECK(cls.points.size() == 25);
    total += cls.points.size();
  }
  CHECK(total == 125);
}

TEST_CASE("evasive construction rejects height below 2") {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 1);
  CHECK_THROWS_AS(construct_class(T, 0), std::invalid_argument);
}

TEST_CASE("field reduction expands coordinates and preserves cardinality") {
  auto F3 = field_create(3, 1);
  auto F9 = field_create(3, 2);
  Extension ext(F3, F9);

  // k = 1 is the identity on coordinates.
  Extension triv(F3, F3);
  std::vector<std::uint32_t> pts{0, 5, 7};
  CHECK(field_reduce(pts, 3, triv) == pts);

  // The q = 9, t = 2 class: 81 points in F_9^3 map to 81 points in F_3^6.
  TowerSpec T9(F9, 2);
  auto cls = construct_class(T9, 0);
  REQUIRE(cls.points.size() == 81);
  auto reduced = field_reduce(cls.points, 3, ext);
  CHECK(reduced.size() == 81);
  std::set<std::uint32_t> dedup(reduced.begin(), reduced.end());
  CHECK(dedup.size() == 81);  // injective
  for (auto r : reduced) CHECK(r < 729u);
}

TEST_CASE("subspace restriction keeps points with vanishing trailing coordinates") {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 2);
  auto cls = construct_class(T, 0);

  // n = N is the identity.
  auto same = restrict_to_subspace(cls.points, 3, 3, 3);
  CHECK(same == cls.points);

  // Computed by hand from v_1 = -(c_0^2 + c_1^2) with c_1 = 0.
  auto res = restrict_to_subspace(cls.points, 3, 2, 3);
  CHECK(res == std::vector<std::uint32_t>{0, 7, 8});

  CHECK_THROWS_AS(restrict_to_subspace(cls.points, 3, 4, 3), std::invalid_argument);
}

TEST_CASE("largest restricted class is at least q^{n-k}") {
  // Restrict the reduced q = 9 partition to AG(4, 3): some class keeps at
  // least 3^{4-2} = 9 points.
  auto F3 = field_create(3, 1);
  auto F9 = field_create(3, 2);
  Extension ext(F3, F9);
  TowerSpec T9(F9, 2);
  std::size_t best = 0;
  for (std::uint32_t u = 0; u < 9; ++u) {
    auto reduced = field_reduce(construct_class(T9, u).points, 3, ext);
    best = std::max(best, restrict_to_subspace(reduced, 6, 4, 3).size());
  }
  CHECK(best >= 9);
}
