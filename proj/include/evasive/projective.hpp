#pragma once

// Points and lines of PG(n, q).
//
// A point is the normalized homogeneous vector (first nonzero coordinate 1)
// of length n+1; points are ranked in lexicographic coordinate order. That
// order nests the spaces: ranks [0, |PG(n-1,q)|) are exactly the hyperplane
// x_0 = 0 with ranks equal to their PG(n-1, q) ranks, and the remaining
// q^n ranks are the affine points (1, x) ordered by the rank of x. The
// recursive colorings lean on this layout.
//
// A line is canonically named by its two rank-least points; enumeration
// walks unordered point pairs and keeps the pairs that are canonical.

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "evasive/affine.hpp"
#include "evasive/field.hpp"
#include "evasive/util.hpp"

namespace evasive::geom {

class ProjectiveSpace {
 public:
  ProjectiveSpace(FieldPtr field, std::uint32_t n, std::uint64_t cap = kDefaultPointCap)
      : field_(std::move(field)), n_(n) {
    const std::uint64_t q = field_->size();
    std::uint64_t affine = checked_pow_u64(q, n + 1, cap);  // q^{n+1}
    npoints_ = (affine - 1) / (q - 1);
    offset_.assign(n + 2, 0);
    // offset_[lead] = rank of the first point whose leading 1 is at `lead`;
    // larger lead positions come first.
    std::uint64_t acc = 0;
    for (std::uint32_t lead = n + 1; lead-- > 0;) {
      offset_[lead] = acc;
      std::uint64_t block = 1;
      for (std::uint32_t j = lead + 1; j <= n; ++j) block *= q;
      acc += block;
    }
  }

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  std::uint32_t dim() const { return n_; }
  std::uint64_t q() const { return field_->size(); }
  std::uint64_t point_count() const { return npoints_; }

  // Number of lines: the Gaussian binomial [n+1 choose 2]_q. The product is
  // divided as a whole; the partial quotients need not be integers.
  std::uint64_t line_count() const {
    const std::uint64_t q = field_->size();
    std::uint64_t qn1 = 1, qn = 1;
    for (std::uint32_t j = 0; j <= n_; ++j) qn1 *= q;
    for (std::uint32_t j = 0; j < n_; ++j) qn *= q;
    return (qn1 - 1) * (qn - 1) / ((q * q - 1) * (q - 1));
  }

  // Hyperplane x_0 = 0, isomorphic to PG(n-1, q) with identical ranks.
  std::uint64_t infinity_count() const { return offset_[0]; }
  bool is_affine(std::uint64_t rank) const { return rank >= offset_[0]; }
  std::uint64_t affine_rank(std::uint64_t rank) const { return rank - offset_[0]; }
  std::uint64_t from_affine_rank(std::uint64_t ag_rank) const { return offset_[0] + ag_rank; }

  void decode(std::uint64_t rank, std::uint32_t* coords) const {
    std::uint32_t lead = 0;
    for (; lead <= n_; ++lead) {
      std::uint64_t block = 1;
      for (std::uint32_t j = lead + 1; j <= n_; ++j) block *= field_->size();
      if (rank >= offset_[lead] && rank < offset_[lead] + block) break;
    }
    std::uint64_t suffix = rank - offset_[lead];
    for (std::uint32_t j = 0; j <= n_; ++j) coords[j] = 0;
    coords[lead] = field_->one();
    for (std::uint32_t j = n_ + 1; j-- > lead + 1;) {
      coords[j] = static_cast<std::uint32_t>(suffix % field_->size());
      suffix /= field_->size();
    }
  }

  // Rank of an arbitrary nonzero homogeneous vector.
  std::uint64_t rank_of(const std::uint32_t* coords) const {
    std::uint32_t lead = 0;
    while (lead <= n_ && coords[lead] == 0) ++lead;
    if (lead > n_) throw std::invalid_argument("projective point must be nonzero");
    std::uint32_t s = field_->inv(coords[lead]);
    std::uint64_t suffix = 0;
    for (std::uint32_t j = lead + 1; j <= n_; ++j)
      suffix = suffix * field_->size() + field_->mul(coords[j], s);
    return offset_[lead] + suffix;
  }

  // Calls fn(ranks) once per line with the q+1 point ranks ascending; the
  // canonical spanning pair is (ranks[0], ranks[1]). Shards over the first
  // point; fn must be safe for concurrent shards when workers > 1.
  template <typename Fn>
  void for_each_line(unsigned workers, Fn&& fn) const {
    const std::uint64_t q = field_->size();
    run_sharded(npoints_, workers, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<std::uint32_t> vp(n_ + 1), vq(n_ + 1), vc(n_ + 1);
      std::vector<std::uint64_t> ranks(q + 1);
      for (std::uint64_t P = lo; P < hi; ++P) {
        decode(P, vp.data());
        for (std::uint64_t Q = P + 1; Q < npoints_; ++Q) {
          decode(Q, vq.data());
          ranks[0] = P;
          ranks[1] = Q;
          bool canonical = true;
          std::size_t m = 2;
          for (std::uint64_t lam = 1; lam < q && canonical; ++lam) {
            for (std::uint32_t j = 0; j <= n_; ++j)
              vc[j] = field_->add(vp[j],
                                  field_->mul(static_cast<std::uint32_t>(lam), vq[j]));
            std::uint64_t r = rank_of(vc.data());
            if (r < Q) {
              canonical = false;  // (P, Q) is not the least spanning pair
              break;
            }
            ranks[m++] = r;
          }
          if (!canonical) continue;
          std::sort(ranks.begin() + 2, ranks.end());
          fn(ranks.data());
        }
      }
    });
  }

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::uint64_t npoints_ = 0;
  std::vector<std::uint64_t> offset_;
};

struct ProjectiveLineWitness {
  std::uint64_t p0 = 0, p1 = 0;  // canonical spanning pair
  std::uint32_t count = 0;
  std::uint32_t color = 0;

  bool before(const ProjectiveLineWitness& o) const {
    return p0 != o.p0 ? p0 < o.p0 : p1 < o.p1;
  }
};

struct ProjectiveColoringSweep {
  bool ok = true;
  std::uint32_t max_per_line_per_color = 0;
  std::uint64_t lines_swept = 0;
  std::optional<ProjectiveLineWitness> witness;
};

inline ProjectiveColoringSweep sweep_projective_coloring(const ProjectiveSpace& S,
                                                         const std::vector<std::uint8_t>& colors,
                                                         std::uint32_t k, unsigned workers = 1) {
  if (colors.size() != S.point_count())
    throw std::invalid_argument("coloring must cover every point");
  const std::uint64_t q = S.q();
  std::atomic<std::uint64_t> lines{0};
  std::atomic<std::uint32_t> max_count{0};
  std::mutex mu;
  std::optional<ProjectiveLineWitness> witness;
  S.for_each_line(workers, [&](const std::uint64_t* ranks) {
    thread_local std::vector<std::uint32_t> per_color;
    per_color.assign(k, 0);
    for (std::uint64_t i = 0; i <= q; ++i) ++per_color[colors[ranks[i]]];
    lines.fetch_add(1, std::memory_order_relaxed);
    for (std::uint32_t c = 0; c < k; ++c) {
      std::uint32_t cur = max_count.load(std::memory_order_relaxed);
      while (per_color[c] > cur &&
             !max_count.compare_exchange_weak(cur, per_color[c], std::memory_order_relaxed)) {
      }
      if (per_color[c] == q + 1) {
        ProjectiveLineWitness w{ranks[0], ranks[1], per_color[c], c};
        std::lock_guard<std::mutex> g(mu);
        if (!witness || w.before(*witness)) witness = w;
      }
    }
  });
  ProjectiveColoringSweep out;
  out.lines_swept = lines.load();
  out.max_per_line_per_color = max_count.load();
  out.witness = witness;
  out.ok = !out.witness.has_value();
  return out;
}

}  // namespace evasive::geom
