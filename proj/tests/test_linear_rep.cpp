#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "evasive/linear_rep.hpp"
#include "evasive/partition.hpp"

using namespace evasive;
using namespace evasive::extremal;
using gf::field_create;

namespace {

// The projectivized restricted evasive class used across the extremal tests:
// S_0 for q = 3, t = 2 restricted to AG(2,3), embedded into PG(2,3).
std::vector<std::uint64_t> evasive_set_in_pg23() {
  auto F3 = field_create(3, 1);
  TowerSpec T(F3, 2);
  auto restricted = restrict_to_subspace(construct_class(T, 0).points, 3, 2, 3);
  geom::ProjectiveSpace pg(F3, 2);
  std::vector<std::uint64_t> out;
  for (auto r : restricted) out.push_back(pg.from_affine_rank(r));
  return out;
}

}  // namespace

TEST_CASE("single-point set yields disjoint stars") {
  auto F3 = field_create(3, 1);
  geom::ProjectiveSpace pg(F3, 2);
  auto rep = linear_representation(pg, {0});
  CHECK(rep.g.n_left == 27);
  CHECK(rep.g.n_right == 9);
  for (const auto& v : rep.g.adj_left) CHECK(v.size() == 1);
  for (const auto& v : rep.g.adj_right) CHECK(v.size() == 3);
  CHECK(check_degrees(rep).ok);
}

TEST_CASE("degree facts for the evasive-set representation") {
  auto F3 = field_create(3, 1);
  geom::ProjectiveSpace pg(F3, 2);
  auto S = evasive_set_in_pg23();
  REQUIRE(S.size() == 3);
  auto rep = linear_representation(pg, S);
  CHECK(rep.g.n_left == 27);          // q^{n+1} point vertices
  CHECK(rep.g.n_right == 27);         // |S| q^n line vertices
  CHECK(rep.g.edge_count() == 81);    // |S| q^{n+1}
  auto deg = check_degrees(rep);
  CHECK(deg.ok);
  // bipartite double count
  std::uint64_t left_sum = 0, right_sum = 0;
  for (const auto& v : rep.g.adj_left) left_sum += v.size();
  for (const auto& v : rep.g.adj_right) right_sum += v.size();
  CHECK(left_sum == right_sum);
}

TEST_CASE("line vertices are genuine affine lines with directions in S") {
  auto F3 = field_create(3, 1);
  geom::ProjectiveSpace pg(F3, 2);
  geom::AffineSpace ag(F3, 3);
  auto S = evasive_set_in_pg23();
  auto rep = linear_representation(pg, S);
  std::vector<std::uint32_t> dir(3), a(3), b(3), diff(3);
  for (std::uint32_t li = 0; li < rep.g.n_right; ++li) {
    const auto& pts = rep.g.adj_right[li];
    REQUIRE(pts.size() == 3);
    // all difference vectors are multiples of the direction of block li/9
    pg.decode(S[li / 9], dir.data());
    for (std::size_t i = 1; i < pts.size(); ++i) {
      ag.decode(pts[0], a.data());
      ag.decode(pts[i], b.data());
      for (std::uint32_t j = 0; j < 3; ++j) diff[j] = ag.field().sub(b[j], a[j]);
      auto canon_ab = ag.canonicalize_line(a.data(), diff.data());
      auto canon_dir = ag.canonicalize_line(a.data(), dir.data());
      CHECK(canon_ab == canon_dir);
    }
  }
}

TEST_CASE("empty set is rejected") {
  auto F3 = field_create(3, 1);
  geom::ProjectiveSpace pg(F3, 2);
  CHECK_THROWS_AS(linear_representation(pg, {}), std::invalid_argument);
}
