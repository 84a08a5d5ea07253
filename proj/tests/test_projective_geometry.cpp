#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <set>

#include "evasive/projective.hpp"

using namespace evasive;
using namespace evasive::geom;
using gf::field_create;

namespace {

// Gaussian binomial [n+1 choose 2]_q computed directly.
std::uint64_t gaussian_lines(std::uint32_t n, std::uint64_t q) {
  auto qpow = [&](std::uint32_t k) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < k; ++i) v *= q;
    return v;
  };
  return (qpow(n + 1) - 1) * (qpow(n) - 1) / ((q * q - 1) * (q - 1));
}

}  // namespace

TEST_CASE("projective point counts and rank layout") {
  auto F3 = field_create(3, 1);
  ProjectiveSpace pg23(F3, 2);
  CHECK(pg23.point_count() == 13);
  ProjectiveSpace pg33(F3, 3);
  CHECK(pg33.point_count() == 40);
  CHECK(pg33.infinity_count() == 13);  // hyperplane is PG(2,3)

  // decode/rank round trip, and the affine block sits after the hyperplane
  std::vector<std::uint32_t> c(4);
  for (std::uint64_t r = 0; r < pg33.point_count(); ++r) {
    pg33.decode(r, c.data());
    CHECK(pg33.rank_of(c.data()) == r);
    CHECK(pg33.is_affine(r) == (c[0] != 0));
  }
  // normalization: scaling a representative does not change the rank
  std::vector<std::uint32_t> v{2, 1, 0, 2};
  std::vector<std::uint32_t> w(4);
  for (std::uint32_t s = 1; s < 3; ++s) {
    for (std::uint32_t j = 0; j < 4; ++j) w[j] = F3->mul(v[j], F3->from_prime(s));
    CHECK(pg33.rank_of(w.data()) == pg33.rank_of(v.data()));
  }
}

TEST_CASE("projective line counts") {
  auto F3 = field_create(3, 1);
  ProjectiveSpace pg13(F3, 1);
  CHECK(pg13.line_count() == 1);

  ProjectiveSpace pg23(F3, 2);
  CHECK(pg23.line_count() == 13);
  // pair-count oracle: 13 points, every line has binom(4,2)=6 point pairs
  CHECK(13u * 12 / 2 / 6 == pg23.line_count());

  ProjectiveSpace pg33(F3, 3);
  CHECK(pg33.line_count() == 130);
  CHECK(gaussian_lines(3, 3) == 130);

  auto F4 = field_create(2, 2);
  ProjectiveSpace pg24(F4, 2);
  CHECK(pg24.point_count() == 21);
  CHECK(pg24.line_count() == 21);

  auto F9 = field_create(3, 2);
  ProjectiveSpace pg39(F9, 3);
  CHECK(pg39.point_count() == 820);
  CHECK(pg39.line_count() == 7462);
}

TEST_CASE("line enumeration matches the count and covers pairs once") {
  auto F3 = field_create(3, 1);
  ProjectiveSpace S(F3, 3);
  std::uint64_t lines = 0;
  std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
  S.for_each_line(1, [&](const std::uint64_t* ranks) {
    ++lines;
    // q+1 distinct ascending points; record all pairs
    for (std::uint32_t i = 0; i <= 3; ++i) {
      for (std::uint32_t j = i + 1; j <= 3; ++j) {
        CHECK(ranks[i] < ranks[j]);
        auto inserted = pairs.emplace(ranks[i], ranks[j]);
        CHECK(inserted.second);  // two points span one line
      }
    }
  });
  CHECK(lines == 130);
  CHECK(pairs.size() == 40u * 39 / 2);  // every pair on exactly one line
}

TEST_CASE("parallel projective enumeration agrees") {
  auto F3 = field_create(3, 1);
  ProjectiveSpace S(F3, 3);
  std::atomic<std::uint64_t> lines{0};
  S.for_each_line(4, [&](const std::uint64_t*) { lines.fetch_add(1); });
  CHECK(lines.load() == 130);
}

TEST_CASE("constant coloring has a monochromatic witness") {
  auto F3 = field_create(3, 1);
  ProjectiveSpace S(F3, 2);
  std::vector<std::uint8_t> colors(S.point_count(), 0);
  auto sweep = sweep_projective_coloring(S, colors, 1);
  CHECK_FALSE(sweep.ok);
  REQUIRE(sweep.witness.has_value());
  CHECK(sweep.witness->p0 == 0);  // least spanning pair of the least line
  CHECK(sweep.max_per_line_per_color == 4);
}
