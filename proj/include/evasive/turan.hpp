#pragma once

// Turan-number evaluators for bipartite graphs excluding C4 and theta_{3,t}.
//
// The upper-bound evaluator instantiates the explicit part of the bound
//   cbrt(t-1) (mn)^{2/3} + t n^{3/4} m^{1/2} + m cbrt(n) + n
// with the asymptotic (1+o(1)) factor replaced by 1; outputs are labeled an
// envelope, never a certified bound. The lower-bound parameter map reports,
// for the graphs built from evasive sets in PG(j, q), the part-size exponent
// a = (j+1)/(2j-1) and the edge exponent (2+2a)/3 = 2j/(2j-1).

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "evasive/util.hpp"

namespace evasive::extremal {

struct TuranEnvelope {
  double value = 0;
  double term_lead = 0;   // cbrt(t-1) (mn)^{2/3}
  double term_mid = 0;    // t n^{3/4} m^{1/2}
  double term_cube = 0;   // m cbrt(n)
  double term_linear = 0; // n
  double degree_split = 0;  // d = n^{5/8} / m^{1/4}
  double a = 0;             // log m / log n
  bool regime_ok = false;   // a in (1/2, 1), where the bound is tight
};

inline TuranEnvelope turan_upper_bound(std::uint64_t n, std::uint64_t m, std::uint32_t t) {
  if (m < 1 || n < 1) throw std::invalid_argument("part sizes must be positive");
  if (m > n) throw std::invalid_argument("requires n >= m");
  if (t < 2) throw std::invalid_argument("theta parameter must be at least 2");
  TuranEnvelope env;
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  env.term_lead = std::cbrt(static_cast<double>(t - 1)) * std::pow(dm * dn, 2.0 / 3.0);
  env.term_mid = static_cast<double>(t) * std::pow(dn, 0.75) * std::sqrt(dm);
  env.term_cube = dm * std::cbrt(dn);
  env.term_linear = dn;
  env.value = env.term_lead + env.term_mid + env.term_cube + env.term_linear;
  env.degree_split = std::pow(dn, 0.625) / std::pow(dm, 0.25);
  env.a = n > 1 ? std::log(dm) / std::log(dn) : 1.0;
  env.regime_ok = env.a > 0.5 && env.a < 1.0;
  return env;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction reduced(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    if (den < 0) g = -g;
    return Fraction{num / g, den / g};
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

struct LowerBoundParams {
  std::uint32_t t = 0;
  std::uint32_t j = 0;
  Fraction a;         // part-size exponent (j+1)/(2j-1)
  Fraction exponent;  // edge exponent 2j/(2j-1)
  std::uint32_t line_vertex_exp = 0;   // q^{2j-1} line vertices
  std::uint32_t point_vertex_exp = 0;  // q^{j+1} point vertices
};

inline LowerBoundParams lower_bound_parameters(std::uint32_t t, std::uint32_t j) {
  if (j < 2 || j > binom2(t + 1))
    throw std::invalid_argument("j must satisfy 2 <= j <= t(t+1)/2");
  LowerBoundParams out;
  out.t = t;
  out.j = j;
  out.a = Fraction::reduced(j + 1, 2 * static_cast<std::int64_t>(j) - 1);
  out.exponent = Fraction::reduced(2 * static_cast<std::int64_t>(j), 2 * static_cast<std::int64_t>(j) - 1);
  out.line_vertex_exp = 2 * j - 1;
  out.point_vertex_exp = j + 1;
  return out;
}

}  // namespace evasive::extremal
