#pragma once

// Exact arithmetic in F_{p^e} for small prime powers.
//
// Elements are stored as integer ranks in [0, p^e). The base-p digits of a
// rank, read most-significant first, are the coefficients (c_0, ..., c_{e-1})
// of the element over the prime field, c_k the coefficient of x^k. With this
// convention the integer order on ranks coincides with the low-degree-first
// lexicographic order on coefficient vectors, which is the canonical order
// used everywhere (modulus choice, embedding roots, point ordering).
//
// The modulus of F_{p^e} is the lexicographically smallest monic irreducible
// polynomial of degree e over F_p, so two runs always build bit-identical
// fields and certificates can embed {p, e, modulus} as a full description.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "evasive/util.hpp"

namespace evasive::gf {

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::vector<std::uint32_t> modulus;  // length e+1, modulus[k] = coeff of x^k

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p && a.e == b.e && a.modulus == b.modulus;
  }
};

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, ascending-degree coefficients. Only used for
// modulus search and table construction; hot paths never touch these.
using PrimePoly = std::vector<std::uint32_t>;

inline PrimePoly poly_mul(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  return r;
}

// Remainder of a modulo monic m.
inline PrimePoly poly_rem(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t j = 0; j <= dm; ++j) {
        std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[j] % p;
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

inline bool poly_is_zero(const PrimePoly& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg/2. Degree-1 candidates catch roots, so no separate root search.
inline bool poly_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      PrimePoly div(d + 1, 0);
      div[d] = 1;
      std::uint64_t t = r;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_is_zero(poly_rem(f, div, p))) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  static constexpr std::uint64_t kDefaultElementCap = std::uint64_t{1} << 20;

  Field(std::uint32_t p, std::uint32_t e, std::uint64_t cap = kDefaultElementCap)
      : p_(p), e_(e) {
    if (!detail::is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
    if (e == 0) throw std::invalid_argument("extension degree must be positive");
    q_ = checked_pow_u64(p, e, cap);
    spec_.p = p;
    spec_.e = e;
    spec_.modulus = canonical_modulus(p, e);
    msb_ = 1;
    for (std::uint32_t i = 1; i < e_; ++i) msb_ *= p_;
    one_ = from_prime(1);
    build_tables();
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint64_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return spec_.modulus; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return one_; }
  std::uint32_t generator() const { return gen_; }

  // Scalar c of the prime subfield, 0 <= c < p.
  std::uint32_t from_prime(std::uint32_t c) const {
    return c * static_cast<std::uint32_t>(msb_);
  }

  std::vector<std::uint32_t> coeffs(std::uint32_t x) const {
    std::vector<std::uint32_t> c(e_);
    for (std::uint32_t k = e_; k-- > 0;) {
      c[k] = x % p_;
      x /= p_;
    }
    return c;
  }

  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != e_) throw std::invalid_argument("coefficient vector has wrong length");
    std::uint32_t r = 0;
    for (std::uint32_t k = 0; k < e_; ++k) {
      if (c[k] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
      r = r * p_ + c[k];
    }
    return r;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }

  std::uint32_t neg(std::uint32_t a) const { return neg_table_[a]; }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return exp_[q_ - 1 - log_[a]];
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  // Square-and-multiply; exponent reduced mod q-1 for nonzero base.
  std::uint32_t pow(std::uint32_t x, std::uint64_t k) const {
    if (x == 0) return k == 0 ? one_ : 0;
    k %= q_ - 1;
    std::uint32_t acc = one_;
    std::uint32_t base = x;
    while (k) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  // Discrete log to base generator(); x != 0.
  std::uint64_t log(std::uint32_t x) const {
    if (x == 0) throw std::domain_error("log of zero");
    return log_[x];
  }
  std::uint32_t exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  static std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      detail::PrimePoly f(e + 1, 0);
      f[e] = 1;
      // Rank digits MSB-first are (c_0, ..., c_{e-1}), matching the canonical
      // low-degree-first lexicographic candidate order.
      std::uint64_t t = r;
      for (std::uint32_t k = e; k-- > 0;) {
        f[k] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (detail::poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
  }

 private:
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    std::uint64_t place = 1;
    for (std::uint32_t k = 0; k < e_; ++k) {
      std::uint32_t da = a % p_, db = b % p_;
      a /= p_;
      b /= p_;
      r += static_cast<std::uint32_t>(((da + db) % p_) * place);
      place *= p_;
    }
    return r;
  }

  detail::PrimePoly to_poly(std::uint32_t x) const {
    detail::PrimePoly c(e_);
    auto v = coeffs(x);
    for (std::uint32_t k = 0; k < e_; ++k) c[k] = v[k];
    return c;
  }

  std::uint32_t from_poly(const detail::PrimePoly& f) const {
    std::vector<std::uint32_t> c(e_, 0);
    for (std::size_t k = 0; k < f.size() && k < e_; ++k) c[k] = f[k];
    return from_coeffs(c);
  }

  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    auto prod = detail::poly_mul(to_poly(a), to_poly(b), p_);
    return from_poly(detail::poly_rem(std::move(prod), spec_.modulus, p_));
  }

  std::uint32_t pow_poly(std::uint32_t x, std::uint64_t k) const {
    std::uint32_t acc = one_;
    std::uint32_t base = x;
    while (k) {
      if (k & 1) acc = mul_poly(acc, base);
      base = mul_poly(base, base);
      k >>= 1;
    }
    return acc;
  }

  void build_tables() {
    neg_table_.resize(q_);
    for (std::uint64_t x = 0; x < q_; ++x) {
      std::uint32_t r = 0;
      std::uint64_t v = x, place = 1;
      for (std::uint32_t k = 0; k < e_; ++k) {
        std::uint32_t d = static_cast<std::uint32_t>(v % p_);
        v /= p_;
        r += static_cast<std::uint32_t>(((p_ - d) % p_) * place);
        place *= p_;
      }
      neg_table_[x] = r;
    }

    if (p_ != 2 && q_ <= 512) {
      add_table_.resize(q_ * q_);
      for (std::uint64_t a = 0; a < q_; ++a)
        for (std::uint64_t b = 0; b < q_; ++b)
          add_table_[a * q_ + b] =
              add_digits(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }

    // Prime factors of q-1, for the primitive-element test.
    std::vector<std::uint64_t> factors;
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) factors.push_back(m);

    gen_ = 0;
    for (std::uint64_t c = 1; c < q_; ++c) {
      bool primitive = true;
      for (auto f : factors) {
        if (pow_poly(static_cast<std::uint32_t>(c), (q_ - 1) / f) == one_) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen_ = static_cast<std::uint32_t>(c);
        break;
      }
    }

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    exp_[0] = one_;
    for (std::uint64_t k = 1; k < q_ - 1; ++k) exp_[k] = mul_poly(exp_[k - 1], gen_);
    for (std::uint64_t k = 0; k < q_ - 1; ++k) {
      log_[exp_[k]] = k;
      exp_[k + (q_ - 1)] = exp_[k];
    }
  }

  std::uint32_t p_, e_;
  std::uint64_t q_;
  std::uint64_t msb_;  // p^{e-1}, the place value of c_0
  FieldSpec spec_;
  std::uint32_t one_ = 0, gen_ = 0;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint64_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Canonical field registry: field_create(p, e) is idempotent and all users
// share one immutable instance per (p, e).
inline FieldPtr field_create(std::uint32_t p, std::uint32_t e,
                             std::uint64_t cap = Field::kDefaultElementCap) {
  if (p < 2 || e == 0) throw std::invalid_argument("bad field parameters");
  checked_pow_u64(p, e, cap);  // honor the requested cap even on cache hits
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto f = std::make_shared<const Field>(p, e, cap);
  registry.emplace(key, f);
  return f;
}

// Splits a prime power q = p^e; rejects non prime powers.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t e = 0;
  std::uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), e};
}

}  // namespace evasive::gf
