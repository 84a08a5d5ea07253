#pragma once

// The line-evasive partition of V = F_q x F_{q^2} x ... x F_{q^t}.
//
// Every v in V gets the base-field label v_1 + N_2(v_2) + ... + N_t(v_t),
// N_i the norm of F_{q^i} down to F_q. The fiber of each label u is a class
// of q^{T-1} points (T = t(t+1)/2) meeting every affine line of AG(T, q) in
// at most t points; the q fibers partition the space.
//
// Points are exchanged with the geometry verifiers as flat ranks: the
// mixed-radix encoding of the concatenated base-field coordinates of the
// parts, first coordinate most significant, so rank order is lexicographic
// order on flattened coordinate vectors.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "evasive/extension.hpp"

namespace evasive {

using gf::Extension;
using gf::TowerSpec;

struct EvasiveVector {
  std::vector<std::uint32_t> parts;  // parts[i-1] lives in tower level i
};

inline EvasiveVector zero_vector(const TowerSpec& T) {
  return EvasiveVector{std::vector<std::uint32_t>(T.height(), 0)};
}

// The class label of v (the value of the defining polynomial at v).
inline std::uint32_t class_label(const TowerSpec& T, const EvasiveVector& v) {
  if (v.parts.size() != T.height()) throw std::invalid_argument("vector height mismatch");
  std::uint32_t acc = 0;
  for (std::uint32_t i = 1; i <= T.height(); ++i)
    acc = T.base().add(acc, T.level(i).norm(v.parts[i - 1]));
  return acc;
}

// a*x + b with x a base-field scalar applied to every part.
inline EvasiveVector scale_add(const TowerSpec& T, const EvasiveVector& a, std::uint32_t x,
                               const EvasiveVector& b) {
  EvasiveVector r = zero_vector(T);
  for (std::uint32_t i = 1; i <= T.height(); ++i) {
    const Extension& L = T.level(i);
    r.parts[i - 1] = L.sup().add(L.sup().mul(a.parts[i - 1], L.embed(x)), b.parts[i - 1]);
  }
  return r;
}

inline std::uint64_t flat_rank(const TowerSpec& T, const EvasiveVector& v) {
  std::uint64_t acc = 0;
  for (std::uint32_t i = 1; i <= T.height(); ++i) {
    std::uint64_t block = T.level(i).flat_rank(v.parts[i - 1]);
    for (std::uint32_t d = 0; d < i; ++d) acc *= T.q();
    acc += block;
  }
  return acc;
}

inline EvasiveVector from_flat_rank(const TowerSpec& T, std::uint64_t r) {
  EvasiveVector v = zero_vector(T);
  for (std::uint32_t i = T.height(); i >= 1; --i) {
    std::uint64_t block_size = 1;
    for (std::uint32_t d = 0; d < i; ++d) block_size *= T.q();
    v.parts[i - 1] = T.level(i).from_flat_rank(r % block_size);
    r /= block_size;
  }
  return v;
}

inline std::vector<std::uint32_t> flat_coords(const TowerSpec& T, const EvasiveVector& v) {
  std::vector<std::uint32_t> out;
  out.reserve(T.flat_dim());
  for (std::uint32_t i = 1; i <= T.height(); ++i) {
    auto c = T.level(i).to_sub_coords(v.parts[i - 1]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

struct EvasiveClass {
  std::uint32_t label = 0;
  std::vector<std::uint32_t> points;  // flat ranks, ascending
};

struct EvasivePartition {
  std::uint64_t q = 0;
  std::uint32_t t = 0;
  std::uint32_t dim = 0;  // t(t+1)/2
  std::vector<EvasiveClass> classes;  // indexed by label rank
};

inline void require_evasive_params(const TowerSpec& T) {
  if (T.height() < 2)
    throw std::invalid_argument("evasive construction needs tower height at least 2");
  // height < q is already enforced by TowerSpec.
}

// The fiber of label u, enumerated by free choice of (v_2, ..., v_t); the
// first part is forced. Exactly q^{dim-1} points, ascending flat rank.
inline EvasiveClass construct_class(const TowerSpec& T, std::uint32_t u,
                                    std::uint64_t point_cap = kDefaultPointCap) {
  require_evasive_params(T);
  const std::uint32_t t = T.height();
  const std::uint64_t q = T.q();
  const std::uint32_t dim = T.flat_dim();
  checked_pow_u64(q, dim, point_cap);  // the class lives in AG(dim, q)

  std::uint64_t total = 1;  // q^{dim-1}
  for (std::uint32_t d = 1; d < dim; ++d) total *= q;

  // Per level i >= 2: the rank contribution of each element (its flat block
  // shifted into position) and its norm.
  std::vector<std::vector<std::uint64_t>> contrib(t + 1);
  std::vector<std::vector<std::uint32_t>> norms(t + 1);
  std::vector<std::uint64_t> sizes(t + 1);
  for (std::uint32_t i = 2; i <= t; ++i) {
    const Extension& L = T.level(i);
    std::uint64_t shift = 1;  // q^{digits after block i} = q^{dim - i(i+1)/2}
    for (std::uint32_t d = dim - i * (i + 1) / 2; d > 0; --d) shift *= q;
    sizes[i] = L.sup().size();
    contrib[i].resize(sizes[i]);
    norms[i].resize(sizes[i]);
    for (std::uint64_t x = 0; x < sizes[i]; ++x) {
      contrib[i][x] = L.flat_rank(static_cast<std::uint32_t>(x)) * shift;
      norms[i][x] = L.norm(static_cast<std::uint32_t>(x));
    }
  }
  std::uint64_t v1_shift = 1;
  for (std::uint32_t d = 1; d < dim; ++d) v1_shift *= q;

  EvasiveClass cls;
  cls.label = u;
  cls.points.reserve(total);
  std::vector<std::uint64_t> idx(t + 1, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    std::uint64_t rank = 0;
    std::uint32_t norm_sum = 0;
    for (std::uint32_t i = 2; i <= t; ++i) {
      rank += contrib[i][idx[i]];
      norm_sum = T.base().add(norm_sum, norms[i][idx[i]]);
    }
    std::uint32_t v1 = T.base().sub(u, norm_sum);
    cls.points.push_back(static_cast<std::uint32_t>(rank + v1 * v1_shift));
    for (std::uint32_t i = t; i >= 2; --i) {
      if (++idx[i] < sizes[i]) break;
      idx[i] = 0;
    }
  }
  std::sort(cls.points.begin(), cls.points.end());
  return cls;
}

inline EvasivePartition construct_partition(const TowerSpec& T,
                                            std::uint64_t point_cap = kDefaultPointCap) {
  require_evasive_params(T);
  EvasivePartition part;
  part.q = T.q();
  part.t = T.height();
  part.dim = T.flat_dim();
  part.classes.reserve(part.q);
  for (std::uint32_t u = 0; u < part.q; ++u)
    part.classes.push_back(construct_class(T, u, point_cap));
  return part;
}

// Re-expresses points of AG(n, Q) over the subfield: every coordinate in
// F_Q becomes its ratio() coordinates over F_q. Injective, order-preserving.
inline std::vector<std::uint32_t> field_reduce(const std::vector<std::uint32_t>& points,
                                               std::uint32_t n, const Extension& ext) {
  const std::uint64_t Q = ext.sup().size();
  std::vector<std::uint32_t> out;
  out.reserve(points.size());
  for (auto r : points) {
    std::vector<std::uint32_t> c(n);
    std::uint64_t v = r;
    for (std::uint32_t j = n; j-- > 0;) {
      c[j] = static_cast<std::uint32_t>(v % Q);
      v /= Q;
    }
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t d = 0; d < ext.ratio(); ++d) acc *= ext.sub().size();
      acc += ext.flat_rank(c[j]);
    }
    out.push_back(static_cast<std::uint32_t>(acc));
  }
  return out;
}

// Points whose trailing n_old - n_new coordinates vanish, projected onto the
// leading coordinates. Evasiveness is inherited by the image.
inline std::vector<std::uint32_t> restrict_to_subspace(const std::vector<std::uint32_t>& points,
                                                       std::uint32_t n_old, std::uint32_t n_new,
                                                       std::uint64_t q) {
  if (n_new > n_old) throw std::invalid_argument("target dimension exceeds source dimension");
  std::uint64_t tail = 1;
  for (std::uint32_t d = 0; d < n_old - n_new; ++d) tail *= q;
  std::vector<std::uint32_t> out;
  for (auto r : points)
    if (r % tail == 0) out.push_back(static_cast<std::uint32_t>(r / tail));
  return out;
}

}  // namespace evasive
