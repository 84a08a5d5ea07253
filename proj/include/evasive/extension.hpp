#pragma once

// Subfield embeddings F_{q} -> F_{q^k} with explicit coordinate maps, norm
// and trace down to the subfield, and norm preimage lists.
//
// The embedding sends the subfield generator to the smallest root (in
// coefficient-lexicographic order) of the subfield modulus inside the big
// field. Coordinates are taken over the power basis {1, g, ..., g^{k-1}} of
// the class g of x in the big field, which is a basis over the embedded
// subfield.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "evasive/field.hpp"

namespace evasive::gf {

namespace detail {

// Gauss-Jordan inverse of a square matrix over F_p. Row-major.
inline std::vector<std::uint32_t> invert_matrix_mod_p(std::vector<std::uint32_t> m,
                                                      std::uint32_t dim, std::uint32_t p) {
  std::vector<std::uint32_t> inv(dim * dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) inv[i * dim + i] = 1;
  auto inv_mod = [p](std::uint32_t a) {
    // p is small; extended Euclid not worth it.
    for (std::uint32_t x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    throw std::logic_error("non-invertible pivot");
  };
  for (std::uint32_t col = 0; col < dim; ++col) {
    std::uint32_t piv = col;
    while (piv < dim && m[piv * dim + col] == 0) ++piv;
    if (piv == dim) throw std::logic_error("singular coordinate matrix");
    if (piv != col) {
      for (std::uint32_t j = 0; j < dim; ++j) {
        std::swap(m[piv * dim + j], m[col * dim + j]);
        std::swap(inv[piv * dim + j], inv[col * dim + j]);
      }
    }
    std::uint32_t s = inv_mod(m[col * dim + col]);
    for (std::uint32_t j = 0; j < dim; ++j) {
      m[col * dim + j] = m[col * dim + j] * s % p;
      inv[col * dim + j] = inv[col * dim + j] * s % p;
    }
    for (std::uint32_t r = 0; r < dim; ++r) {
      if (r == col) continue;
      std::uint32_t f = m[r * dim + col];
      if (!f) continue;
      for (std::uint32_t j = 0; j < dim; ++j) {
        m[r * dim + j] = (m[r * dim + j] + p * p - f * m[col * dim + j] % p * 1u) % p;
        inv[r * dim + j] = (inv[r * dim + j] + p * p - f * inv[col * dim + j] % p * 1u) % p;
      }
    }
  }
  return inv;
}

}  // namespace detail

class Extension {
 public:
  Extension(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->characteristic() != sup_->characteristic())
      throw std::invalid_argument("subfield has different characteristic");
    if (sup_->degree() % sub_->degree() != 0)
      throw std::invalid_argument("subfield degree does not divide field degree");
    k_ = sup_->degree() / sub_->degree();
    build();
  }

  const Field& sub() const { return *sub_; }
  const Field& sup() const { return *sup_; }
  FieldPtr sub_ptr() const { return sub_; }
  FieldPtr sup_ptr() const { return sup_; }
  std::uint32_t ratio() const { return k_; }

  std::uint32_t embed(std::uint32_t sub_rank) const { return emb_[sub_rank]; }

  bool in_subfield(std::uint32_t sup_rank) const {
    return coerce_[sup_rank] != kNone;
  }

  std::uint32_t coerce(std::uint32_t sup_rank) const {
    std::uint32_t r = coerce_[sup_rank];
    if (r == kNone) throw std::domain_error("element is not in the subfield");
    return r;
  }

  // Mixed-radix encoding of the subfield coordinates, c_0 most significant,
  // so integer order on flat ranks is lexicographic order on coordinates.
  std::uint64_t flat_rank(std::uint32_t sup_rank) const { return flat_[sup_rank]; }

  std::vector<std::uint32_t> to_sub_coords(std::uint32_t sup_rank) const {
    std::vector<std::uint32_t> c(k_);
    std::uint64_t f = flat_[sup_rank];
    for (std::uint32_t b = k_; b-- > 0;) {
      c[b] = static_cast<std::uint32_t>(f % sub_->size());
      f /= sub_->size();
    }
    return c;
  }

  std::uint32_t from_sub_coords(const std::vector<std::uint32_t>& c) const {
    if (c.size() != k_) throw std::invalid_argument("coordinate vector has wrong length");
    std::uint32_t acc = 0;
    for (std::uint32_t b = 0; b < k_; ++b)
      acc = sup_->add(acc, sup_->mul(emb_[c[b]], gamma_pow_[b]));
    return acc;
  }

  std::uint32_t from_flat_rank(std::uint64_t f) const {
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t b = k_; b-- > 0;) {
      c[b] = static_cast<std::uint32_t>(f % sub_->size());
      f /= sub_->size();
    }
    return from_sub_coords(c);
  }

  // x^{(|sup|-1)/(|sub|-1)}, landed in the subfield.
  std::uint32_t norm(std::uint32_t sup_rank) const { return norm_[sup_rank]; }

  // x + x^q + ... + x^{q^{k-1}}, q = |sub|.
  std::uint32_t trace(std::uint32_t sup_rank) const { return trace_[sup_rank]; }

  // Preimages of a subfield value under the norm, ascending flat rank.
  const std::vector<std::uint32_t>& norm_preimages(std::uint32_t sub_rank) const {
    return fibers_[sub_rank];
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  void build() {
    const std::uint64_t qs = sub_->size();
    const std::uint64_t Q = sup_->size();
    const std::uint32_t p = sup_->characteristic();

    // beta = smallest root of the subfield modulus inside sup.
    std::uint32_t beta = 0;
    if (k_ == 1) {
      beta = 0;  // unused; embedding is the identity
    } else {
      const auto& m = sub_->modulus();
      bool found = false;
      for (std::uint64_t x = 0; x < Q && !found; ++x) {
        std::uint32_t acc = sup_->from_prime(m.back());
        for (std::size_t j = m.size() - 1; j-- > 0;)
          acc = sup_->add(sup_->mul(acc, static_cast<std::uint32_t>(x)),
                          sup_->from_prime(m[j]));
        if (acc == 0) {
          beta = static_cast<std::uint32_t>(x);
          found = true;
        }
      }
      if (!found) throw std::logic_error("subfield modulus has no root in extension");
    }

    // Embedding: sum c_a alpha^a -> sum c_a beta^a with prime coefficients.
    emb_.resize(qs);
    coerce_.assign(Q, kNone);
    if (k_ == 1) {
      for (std::uint64_t r = 0; r < qs; ++r) {
        emb_[r] = static_cast<std::uint32_t>(r);
        coerce_[r] = static_cast<std::uint32_t>(r);
      }
    } else {
      std::vector<std::uint32_t> beta_pow(sub_->degree());
      beta_pow[0] = sup_->one();
      for (std::uint32_t a = 1; a < sub_->degree(); ++a)
        beta_pow[a] = sup_->mul(beta_pow[a - 1], beta);
      for (std::uint64_t r = 0; r < qs; ++r) {
        auto c = sub_->coeffs(static_cast<std::uint32_t>(r));
        std::uint32_t acc = 0;
        for (std::uint32_t a = 0; a < sub_->degree(); ++a) {
          std::uint32_t scaled = 0;
          for (std::uint32_t rep = 0; rep < c[a]; ++rep)
            scaled = sup_->add(scaled, beta_pow[a]);
          acc = sup_->add(acc, scaled);
        }
        emb_[r] = acc;
        coerce_[acc] = static_cast<std::uint32_t>(r);
      }
    }

    // gamma powers and the coordinate matrix over F_p.
    gamma_pow_.resize(k_);
    gamma_pow_[0] = sup_->one();
    if (k_ > 1) {
      std::vector<std::uint32_t> gc(sup_->degree(), 0);
      gc[1] = 1;
      std::uint32_t gamma = sup_->from_coeffs(gc);
      for (std::uint32_t b = 1; b < k_; ++b)
        gamma_pow_[b] = sup_->mul(gamma_pow_[b - 1], gamma);
    }

    flat_.resize(Q);
    if (k_ == 1) {
      for (std::uint64_t x = 0; x < Q; ++x) flat_[x] = x;
    } else {
      const std::uint32_t dim = sup_->degree();
      const std::uint32_t es = sub_->degree();
      std::vector<std::uint32_t> mat(dim * dim, 0);
      for (std::uint32_t b = 0; b < k_; ++b) {
        for (std::uint32_t a = 0; a < es; ++a) {
          std::vector<std::uint32_t> unit(es, 0);
          unit[a] = 1;
          std::uint32_t g = sup_->mul(emb_[sub_->from_coeffs(unit)], gamma_pow_[b]);
          auto digits = sup_->coeffs(g);
          for (std::uint32_t row = 0; row < dim; ++row)
            mat[row * dim + (b * es + a)] = digits[row];
        }
      }
      auto minv = detail::invert_matrix_mod_p(std::move(mat), dim, p);
      for (std::uint64_t x = 0; x < Q; ++x) {
        auto digits = sup_->coeffs(static_cast<std::uint32_t>(x));
        std::uint64_t f = 0;
        for (std::uint32_t b = 0; b < k_; ++b) {
          std::vector<std::uint32_t> cc(es, 0);
          for (std::uint32_t a = 0; a < es; ++a) {
            std::uint64_t acc = 0;
            for (std::uint32_t col = 0; col < dim; ++col)
              acc += static_cast<std::uint64_t>(minv[(b * es + a) * dim + col]) * digits[col];
            cc[a] = static_cast<std::uint32_t>(acc % p);
          }
          f = f * qs + sub_->from_coeffs(cc);
        }
        flat_[x] = f;
      }
    }

    // Norm and trace tables, then fibers sorted by coordinate order.
    const std::uint64_t exponent = (Q - 1) / (qs - 1);
    norm_.resize(Q);
    trace_.resize(Q);
    norm_[0] = 0;
    trace_[0] = 0;
    for (std::uint64_t x = 1; x < Q; ++x) {
      std::uint32_t n = sup_->pow(static_cast<std::uint32_t>(x), exponent);
      norm_[x] = coerce(n);
      std::uint32_t tr = 0;
      std::uint64_t frob = 1;
      for (std::uint32_t j = 0; j < k_; ++j) {
        tr = sup_->add(tr, sup_->pow(static_cast<std::uint32_t>(x), frob));
        frob *= qs;
      }
      trace_[x] = coerce(tr);
    }
    fibers_.assign(qs, {});
    std::vector<std::uint64_t> order(Q);
    for (std::uint64_t x = 0; x < Q; ++x) order[x] = x;
    std::sort(order.begin(), order.end(),
              [this](std::uint64_t a, std::uint64_t b) { return flat_[a] < flat_[b]; });
    for (auto x : order) fibers_[norm_[x]].push_back(static_cast<std::uint32_t>(x));
  }

  FieldPtr sub_, sup_;
  std::uint32_t k_ = 1;
  std::vector<std::uint32_t> emb_;
  std::vector<std::uint32_t> coerce_;
  std::vector<std::uint64_t> flat_;
  std::vector<std::uint32_t> gamma_pow_;
  std::vector<std::uint32_t> norm_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::vector<std::uint32_t>> fibers_;
};

// The tower F_q, F_{q^2}, ..., F_{q^t} over a base field F_q, each level a
// flat extension of the prime field with coordinate maps down to the base.
class TowerSpec {
 public:
  TowerSpec(FieldPtr base, std::uint32_t t,
            std::uint64_t field_cap = Field::kDefaultElementCap)
      : base_(std::move(base)), t_(t) {
    if (t == 0) throw std::invalid_argument("tower height must be positive");
    if (t >= base_->size())
      throw std::invalid_argument("tower height must be smaller than the base field size");
    levels_.reserve(t);
    for (std::uint32_t i = 1; i <= t; ++i) {
      auto sup = field_create(base_->characteristic(), base_->degree() * i, field_cap);
      levels_.emplace_back(base_, sup);
    }
  }

  const Field& base() const { return *base_; }
  FieldPtr base_ptr() const { return base_; }
  std::uint32_t height() const { return t_; }
  std::uint64_t q() const { return base_->size(); }

  // 1-indexed: level(i) is F_{q^i}.
  const Extension& level(std::uint32_t i) const {
    if (i < 1 || i > t_) throw std::out_of_range("tower level out of range");
    return levels_[i - 1];
  }

  // Dimension of the flattened product space over F_q: 1 + 2 + ... + t.
  std::uint32_t flat_dim() const { return t_ * (t_ + 1) / 2; }

 private:
  FieldPtr base_;
  std::uint32_t t_;
  std::vector<Extension> levels_;
};

}  // namespace evasive::gf
