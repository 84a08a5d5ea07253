#pragma once

// Arithmetic-progression freeness of point sets in F_p^n, p prime.
//
// A t-term progression with nonzero difference lies inside the affine line
// of its difference, so a (t-1)-line evasive set cannot contain one; that is
// the certified fast path. The exhaustive path scans every (start,
// difference) pair and decides independently.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "evasive/affine.hpp"

namespace evasive::extremal {

struct ApWitness {
  std::uint64_t start = 0;
  std::uint64_t diff = 0;  // nonzero point rank of the common difference
};

struct ApVerdict {
  bool free = false;
  bool vacuous = false;              // |S| < t
  bool fast_path_certified = false;  // (t-1)-line evasiveness held
  bool exhaustive_ran = false;
  std::optional<ApWitness> witness;
};

inline ApVerdict is_ap_free(const geom::AffineSpace& S, const std::vector<std::uint32_t>& points,
                            std::uint32_t t, unsigned workers = 1) {
  if (S.field().degree() != 1)
    throw std::invalid_argument("progression check requires a prime field");
  const std::uint64_t p = S.q();
  if (t < 2) throw std::invalid_argument("progression length must be at least 2");
  if (t > p) throw std::invalid_argument("progression length cannot exceed p");

  ApVerdict out;
  if (points.size() < t) {
    out.free = true;
    out.vacuous = true;
    return out;
  }

  Bitset members = geom::make_indicator(S, points);
  auto evasive = geom::sweep_line_evasive(S, members, t - 1, workers);
  out.fast_path_certified = evasive.ok;

  // Exhaustive scan for confirmation (and for the verdict when the fast
  // path is inconclusive).
  out.exhaustive_ran = true;
  const std::uint32_t n = S.dim();
  std::optional<ApWitness> witness;
  std::vector<std::uint32_t> a(n), d(n), x(n);
  for (auto start : points) {
    S.decode(start, a.data());
    for (std::uint64_t diff = 1; diff < S.point_count() && !witness; ++diff) {
      S.decode(diff, d.data());
      bool all = true;
      for (std::uint32_t j = 0; j < n; ++j) x[j] = a[j];
      for (std::uint32_t i = 1; i < t && all; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) x[j] = S.field().add(x[j], d[j]);
        all = members.get(S.encode(x.data()));
      }
      if (all) witness = ApWitness{start, diff};
    }
    if (witness) break;
  }
  out.witness = witness;
  out.free = !witness.has_value();
  if (out.fast_path_certified && !out.free)
    throw std::logic_error("evasive fast path contradicts exhaustive progression scan");
  return out;
}

}  // namespace evasive::extremal
