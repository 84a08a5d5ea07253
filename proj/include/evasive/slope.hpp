#pragma once

// Restriction of the class-label polynomial to a line, and the inverse
// problem: given a target univariate polynomial f with the right constant
// term, find a slope a so that the label along {a*x + b} minus u equals f.
//
// The restriction is recovered by sampling at t+1 scalars and interpolating,
// which is exact because its degree is at most the tower height t < q. The
// slope solve walks levels top-down: at level i the x^i coefficient is
// N_i(a_i) plus a contribution that only involves the already-fixed higher
// parts, so each step reads that contribution off the partially-fixed
// restriction and picks the smallest norm preimage of the difference.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "evasive/partition.hpp"
#include "evasive/poly.hpp"

namespace evasive {

// Coefficients of x -> label(a*x + b) - u, length t+1 (degree <= t).
inline Poly line_restriction_poly(const TowerSpec& T, const EvasiveVector& a,
                                  const EvasiveVector& b, std::uint32_t u) {
  const std::uint32_t t = T.height();
  std::vector<std::uint32_t> xs(t + 1), ys(t + 1);
  for (std::uint32_t i = 0; i <= t; ++i) {
    xs[i] = i;  // t < q, so ranks 0..t are distinct scalars
    ys[i] = T.base().sub(class_label(T, scale_add(T, a, i, b)), u);
  }
  Poly f = poly_interpolate(T.base(), xs, ys);
  f.resize(t + 1, 0);
  return f;
}

// Slope realizing f along a line through b; f must have degree <= t and
// constant term label(b) - u. Preimage ties break by smallest flattened
// coordinates, so the result is deterministic.
inline EvasiveVector solve_slope(const TowerSpec& T, const EvasiveVector& b, std::uint32_t u,
                                 const Poly& f) {
  const std::uint32_t t = T.height();
  if (poly_degree(f) > static_cast<int>(t))
    throw std::invalid_argument("target polynomial degree exceeds tower height");
  Poly target = f;
  target.resize(t + 1, 0);
  if (target[0] != T.base().sub(class_label(T, b), u))
    throw std::invalid_argument("constant term does not match label(b) - u");

  EvasiveVector a = zero_vector(T);
  for (std::uint32_t i = t; i >= 2; --i) {
    // With parts <= i still zero, the x^i coefficient of the restriction is
    // exactly the contribution of the fixed higher parts.
    Poly r = line_restriction_poly(T, a, b, u);
    std::uint32_t need = T.base().sub(target[i], r[i]);
    a.parts[i - 1] = T.level(i).norm_preimages(need).front();
  }
  {
    Poly r = line_restriction_poly(T, a, b, u);
    a.parts[0] = T.base().sub(target[1], r[1]);
  }
  return a;
}

}  // namespace evasive
