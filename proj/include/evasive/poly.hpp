#pragma once

// Small dense polynomials over a Field, coefficients ascending by degree.
// Used by the line-restriction and slope machinery; degrees stay below q.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "evasive/field.hpp"

namespace evasive {

using Poly = std::vector<std::uint32_t>;

inline int poly_degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

inline std::uint32_t poly_eval(const gf::Field& F, const Poly& f, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

inline Poly poly_mul(const gf::Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return r;
}

// lead * (x - r_1) * ... * (x - r_m)
inline Poly poly_from_roots(const gf::Field& F, std::uint32_t lead,
                            const std::vector<std::uint32_t>& roots) {
  Poly f{lead};
  for (auto r : roots) f = poly_mul(F, f, Poly{F.neg(r), F.one()});
  return f;
}

// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
inline Poly poly_interpolate(const gf::Field& F, const std::vector<std::uint32_t>& xs,
                             const std::vector<std::uint32_t>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolation needs matching nonempty samples");
  const std::size_t m = xs.size();
  Poly acc(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Poly basis{F.one()};
    std::uint32_t denom = F.one();
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      basis = poly_mul(F, basis, Poly{F.neg(xs[j]), F.one()});
      denom = F.mul(denom, F.sub(xs[i], xs[j]));
    }
    std::uint32_t scale = F.div(ys[i], denom);
    for (std::size_t d = 0; d < basis.size(); ++d)
      acc[d] = F.add(acc[d], F.mul(scale, basis[d]));
  }
  return acc;
}

}  // namespace evasive
