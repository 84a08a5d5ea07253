#pragma once

// Upper bounds on the chromatic number of projective space and the derived
// lower bounds on the vector space Ramsey number R_q(2; k).
//
// chi_q(n) is the least number of colors for the points of PG(n-1, q) with
// no line inside one class; R_q(2; k) > n iff chi_q(n) <= k. Three formula
// regimes apply and the report records which one won:
//   - partition coloring:  chi_q(n) <= q            for n <= q(q-1)/2 + 1
//   - merged coloring:     chi_q(n) <= ceil(sqrt(8n)) + 4   for 8n <= q(q-2)
//   - recursion:           chi_q(n) <= q * ceil((n+1) / (q(q-1)/2 + 1))

#include <cstdint>
#include <stdexcept>
#include <string>

#include "evasive/util.hpp"

namespace evasive {

struct BoundReport {
  std::string kind;  // "chi-upper" or "ramsey-lower"
  std::uint64_t q = 0;
  std::uint32_t n = 0;  // chi argument (chi reports)
  std::uint32_t k = 0;  // color count (ramsey reports)
  std::uint64_t value = 0;
  std::string formula;  // provenance of the winning formula
  bool has_closed_form = false;
  std::int64_t closed_form_num = 0;  // (k-4)^2, over denominator 8
  std::int64_t closed_form_den = 8;
};

inline std::uint64_t isqrt_ceil(std::uint64_t x) {
  std::uint64_t r = 0;
  while (r * r < x) ++r;
  return r;
}

inline BoundReport chi_upper_bound(std::uint32_t n, std::uint64_t q) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const std::uint64_t D = binom2(q) + 1;
  BoundReport rep;
  rep.kind = "chi-upper";
  rep.q = q;
  rep.n = n;

  // Recursion bound always applies.
  rep.value = q * ((n + 1 + D - 1) / D);
  rep.formula = "recursion";
  // Partition coloring covers one extra dimension: a q-coloring of
  // PG(D-1, q) certifies chi_q(D) <= q.
  if (n <= D && q <= rep.value) {
    rep.value = q;
    rep.formula = "partition-coloring";
  }
  if (8ull * n <= q * (q - 2)) {
    std::uint64_t merged = isqrt_ceil(8ull * n) + 4;
    if (merged < rep.value) {
      rep.value = merged;
      rep.formula = "merged-coloring";
    }
  }
  return rep;
}

// Largest n with chi_upper_bound(n, q) <= k, i.e. a certified R_q(2;k) > n.
// Also carries the closed form (k-4)^2/8 valid for k <= q.
inline BoundReport ramsey_lower_bound(std::uint32_t k, std::uint64_t q) {
  if (k < 1) throw std::invalid_argument("color count must be positive");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  BoundReport rep;
  rep.kind = "ramsey-lower";
  rep.q = q;
  rep.k = k;
  std::uint64_t best = 0;
  std::string formula = "none";
  // chi_upper_bound is nondecreasing in n, so stop at the first failure.
  // The recursion regime alone bounds how far success can reach.
  std::uint64_t limit = (k / q + 2) * binom2(q) + static_cast<std::uint64_t>(k) * k + 16;
  if (limit > 10'000'000) throw CapError("ramsey scan range too large for these parameters");
  for (std::uint32_t n = 1; n <= limit; ++n) {
    auto chi = chi_upper_bound(n, q);
    if (chi.value > k) break;
    best = n;
    formula = chi.formula;
  }
  rep.value = best;
  rep.formula = formula;
  if (k <= q) {
    rep.has_closed_form = true;
    std::int64_t d = static_cast<std::int64_t>(k) - 4;
    rep.closed_form_num = d * d;
    rep.closed_form_den = 8;
  }
  return rep;
}

}  // namespace evasive
