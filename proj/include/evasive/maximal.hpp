#pragma once

// Maximality of an evasive class over a subfield: every point outside the
// class must lie on a subfield line carrying at least t class points.
//
// Two independent engines decide this. The constructive engine targets the
// polynomial c(x - x_1)...(x - x_t) with distinct nonzero subfield roots and
// asks the slope solver for a line realizing it; the roots then land in the
// class by construction. The exhaustive engine re-expresses everything over
// the subfield and scans all subfield lines through every outside point.
// The verdicts must agree.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "evasive/affine.hpp"
#include "evasive/partition.hpp"
#include "evasive/slope.hpp"

namespace evasive {

struct MaximalityReport {
  bool ok = false;
  bool engines_agree = false;
  std::uint64_t outside_points = 0;
  std::uint64_t covered_constructive = 0;
  std::optional<std::uint64_t> uncovered_exhaustive;    // reduced-space rank
  std::optional<std::uint64_t> uncovered_constructive;  // flat rank over F_q
};

// sub_in_base embeds F_{q'} into the tower base F_q; requires t < q'.
inline MaximalityReport check_maximal_evasive(const TowerSpec& T, std::uint32_t u,
                                              const Extension& sub_in_base,
                                              unsigned workers = 1,
                                              std::uint64_t point_cap = geom::kDefaultPointCap) {
  if (!(sub_in_base.sup().spec() == T.base().spec()))
    throw std::invalid_argument("subfield extension must target the tower base field");
  const std::uint32_t t = T.height();
  if (t >= sub_in_base.sub().size())
    throw std::invalid_argument("tower height must be below the subfield size");
  require_evasive_params(T);

  const gf::Field& F = T.base();
  const std::uint32_t dim = T.flat_dim();
  const std::uint64_t total = checked_pow_u64(T.q(), dim, point_cap);

  MaximalityReport rep;

  // Constructive engine.
  std::vector<std::uint32_t> roots(t);
  for (std::uint32_t i = 0; i < t; ++i) roots[i] = sub_in_base.embed(i + 1);
  for (std::uint64_t fr = 0; fr < total; ++fr) {
    EvasiveVector b = from_flat_rank(T, fr);
    std::uint32_t w = F.sub(class_label(T, b), u);
    if (w == 0) continue;  // class member
    ++rep.outside_points;
    std::uint32_t prod = F.one();
    for (auto r : roots) prod = F.mul(prod, F.neg(r));
    Poly f = poly_from_roots(F, F.div(w, prod), roots);
    EvasiveVector a = solve_slope(T, b, u, f);
    bool covered = true;
    for (auto r : roots)
      if (class_label(T, scale_add(T, a, r, b)) != u) covered = false;
    if (covered) {
      ++rep.covered_constructive;
    } else if (!rep.uncovered_constructive) {
      rep.uncovered_constructive = fr;
    }
  }

  // Exhaustive engine over the reduced space.
  EvasiveClass cls = construct_class(T, u);
  auto reduced = field_reduce(cls.points, dim, sub_in_base);
  geom::AffineSpace reduced_space(sub_in_base.sub_ptr(), dim * sub_in_base.ratio(), point_cap);
  Bitset members = geom::make_indicator(reduced_space, reduced);
  auto coverage = geom::sweep_coverage(reduced_space, members, t, workers);
  rep.uncovered_exhaustive = coverage.uncovered;

  bool constructive_ok = !rep.uncovered_constructive.has_value();
  rep.ok = constructive_ok && coverage.ok;
  rep.engines_agree = (constructive_ok == coverage.ok) &&
                      (rep.outside_points == coverage.outside_points);
  return rep;
}

}  // namespace evasive
