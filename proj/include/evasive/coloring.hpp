#pragma once

// Colorings of AG(n, q) and PG(n, q) built from the evasive partition.
//
// The affine coloring labels each point by the partition class containing
// it, after zero-padding trailing coordinates up to the partition dimension.
// With tower height t every affine line meets every class in at most t
// points, so with t < q no affine line is monochromatic.
//
// The projective coloring uses the rank layout of ProjectiveSpace: ranks
// split into [hyperplane at infinity][affine part], and the hyperplane is a
// copy of the space one dimension down with identical ranks. Coloring is
// therefore a simple concatenation down the recursion, ending at the single
// point of PG(0, q).
//
// The merged coloring groups j consecutive classes into one; each projective
// line meets a merged class in at most s*j <= q points, so none is
// monochromatic while only ceil(q/j) colors remain.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "evasive/affine.hpp"
#include "evasive/partition.hpp"
#include "evasive/projective.hpp"

namespace evasive::color {

using gf::FieldPtr;

struct Coloring {
  bool projective = false;
  std::uint32_t n = 0;
  FieldPtr field;
  std::uint32_t k = 0;  // colors are indices in [0, k)
  std::string construction;
  std::vector<std::uint8_t> colors;  // indexed by canonical point rank
  std::uint32_t evasive_height = 0;  // tower height t behind the classes
  std::uint32_t merge_s = 0, merge_j = 0;  // only for merged colorings
};

namespace detail {

inline void check_coloring_params(const gf::Field& F, std::uint32_t n, std::uint32_t t) {
  if (F.size() < 3) throw std::invalid_argument("coloring needs q >= 3");
  if (F.size() > 255) throw std::invalid_argument("coloring supports q up to 255");
  if (t < 1 || t >= F.size()) throw std::invalid_argument("tower height must satisfy 1 <= t < q");
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::uint32_t cap_dim = t * (t + 1) / 2;
  if (n > cap_dim)
    throw std::invalid_argument(
        "dimension exceeds the partition dimension; reduce over a larger field instead");
}

// Colors of AG(m, q) under the height-t partition, trailing-zero padded.
inline void append_affine_colors(const TowerSpec& T, std::uint32_t m,
                                 std::vector<std::uint8_t>& out) {
  const std::uint64_t q = T.q();
  std::uint64_t pad = 1;
  for (std::uint32_t d = m; d < T.flat_dim(); ++d) pad *= q;
  std::uint64_t count = 1;
  for (std::uint32_t d = 0; d < m; ++d) count *= q;
  for (std::uint64_t r = 0; r < count; ++r)
    out.push_back(static_cast<std::uint8_t>(class_label(T, from_flat_rank(T, r * pad))));
}

}  // namespace detail

// q-coloring of AG(n, q) with every line meeting every class in <= t points.
inline Coloring affine_coloring(FieldPtr F, std::uint32_t n, std::uint32_t t) {
  detail::check_coloring_params(*F, n, t);
  TowerSpec T(F, t);
  Coloring c;
  c.projective = false;
  c.n = n;
  c.field = F;
  c.k = static_cast<std::uint32_t>(F->size());
  c.evasive_height = t;
  c.construction = "affine-partition(t=" + std::to_string(t) + ")";
  c.colors.reserve(checked_pow_u64(F->size(), n, std::uint64_t{1} << 32));
  detail::append_affine_colors(T, n, c.colors);
  return c;
}

inline Coloring affine_coloring(FieldPtr F, std::uint32_t n) {
  std::uint32_t t = static_cast<std::uint32_t>(F->size() - 1);
  return affine_coloring(std::move(F), n, t);
}

// q-coloring of PG(n, q): the affine part of every recursion level gets the
// height-t affine coloring, the final point gets color 0.
inline Coloring projective_coloring(FieldPtr F, std::uint32_t n, std::uint32_t t) {
  if (n > 0) detail::check_coloring_params(*F, n, t);
  TowerSpec T(F, t);
  Coloring c;
  c.projective = true;
  c.n = n;
  c.field = F;
  c.k = static_cast<std::uint32_t>(F->size());
  c.evasive_height = t;
  c.construction = "recursive-affine(t=" + std::to_string(t) + ")";
  c.colors.push_back(0);  // PG(0, q)
  for (std::uint32_t m = 1; m <= n; ++m) detail::append_affine_colors(T, m, c.colors);
  return c;
}

inline Coloring projective_coloring(FieldPtr F, std::uint32_t n) {
  std::uint32_t t = static_cast<std::uint32_t>(F->size() - 1);
  return projective_coloring(std::move(F), n, t);
}

// Least s with s(s-1)/2 >= n.
inline std::uint32_t merge_parameter_s(std::uint32_t n) {
  std::uint32_t s = 2;
  while (binom2(s) < n) ++s;
  return s;
}

// Coloring of PG(n, q) with ceil(q/j) colors, j the largest integer with
// j*s <= q. Requires 2s <= q.
inline Coloring merged_coloring(FieldPtr F, std::uint32_t n) {
  const std::uint64_t q = F->size();
  const std::uint32_t s = merge_parameter_s(n);
  if (2ull * s > q)
    throw std::invalid_argument("merged coloring needs 2s <= q (dimension too large for q)");
  const std::uint32_t j = static_cast<std::uint32_t>(q / s);
  Coloring c = projective_coloring(F, n, s - 1);
  for (auto& col : c.colors) col = static_cast<std::uint8_t>(col / j);
  c.k = static_cast<std::uint32_t>((q + j - 1) / j);
  c.merge_s = s;
  c.merge_j = j;
  c.construction = "merged(s=" + std::to_string(s) + ",j=" + std::to_string(j) + ")";
  return c;
}

// Certification sweeps; the returned structs carry witnesses when they fail.
inline geom::ColoringSweepResult certify_affine(const Coloring& c, unsigned workers = 1,
                                                std::uint64_t cap = geom::kDefaultPointCap) {
  if (c.projective) throw std::invalid_argument("affine certification of a projective coloring");
  geom::AffineSpace S(c.field, c.n, cap);
  return geom::sweep_affine_coloring(S, c.colors, c.k, workers);
}

inline geom::ProjectiveColoringSweep certify_projective(const Coloring& c, unsigned workers = 1,
                                                        std::uint64_t cap = geom::kDefaultPointCap) {
  if (!c.projective) throw std::invalid_argument("projective certification of an affine coloring");
  geom::ProjectiveSpace S(c.field, c.n, cap);
  return geom::sweep_projective_coloring(S, c.colors, c.k, workers);
}

}  // namespace evasive::color
