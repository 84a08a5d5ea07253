#pragma once

// Canonical enumeration of points and lines of AG(n, q), plus the exhaustive
// sweep verifiers built on it (line-evasiveness, monochromatic lines,
// maximality coverage).
//
// Points are mixed-radix ranks with coordinate 0 most significant, so rank
// order is lexicographic order on coordinate vectors. A line is represented
// by its direction (first nonzero coordinate scaled to 1) and its
// lexicographically least point; directions are indexed in lexicographic
// order of their coordinate vectors.
//
// Sweeps visit every line exactly once per direction by walking points in
// rank order and claiming unvisited ones, which makes the claimed point the
// canonical base for free. Work shards by direction ranges; every shard owns
// its visited buffer and verdicts reduce deterministically.

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "evasive/field.hpp"
#include "evasive/util.hpp"

namespace evasive::geom {

using gf::Field;
using gf::FieldPtr;
using evasive::kDefaultPointCap;

class AffineSpace {
 public:
  AffineSpace(FieldPtr field, std::uint32_t n, std::uint64_t cap = kDefaultPointCap)
      : field_(std::move(field)), n_(n) {
    if (n == 0) throw std::invalid_argument("affine dimension must be positive");
    npoints_ = checked_pow_u64(field_->size(), n, cap);
    ndirs_ = (npoints_ - 1) / (field_->size() - 1);
    // Direction blocks in lexicographic order: lead position n-1 comes
    // first, block for lead L holds q^{n-1-L} directions.
    dir_offset_.assign(n, 0);
    std::uint64_t acc = 0;
    for (std::uint32_t lead = n; lead-- > 0;) {
      dir_offset_[lead] = acc;
      std::uint64_t block = 1;
      for (std::uint32_t j = lead + 1; j < n; ++j) block *= field_->size();
      acc += block;
    }
  }

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  std::uint32_t dim() const { return n_; }
  std::uint64_t q() const { return field_->size(); }
  std::uint64_t point_count() const { return npoints_; }
  std::uint64_t direction_count() const { return ndirs_; }
  std::uint64_t line_count() const { return npoints_ / field_->size() * ndirs_; }

  void decode(std::uint64_t rank, std::uint32_t* coords) const {
    for (std::uint32_t j = n_; j-- > 0;) {
      coords[j] = static_cast<std::uint32_t>(rank % field_->size());
      rank /= field_->size();
    }
  }

  std::uint64_t encode(const std::uint32_t* coords) const {
    std::uint64_t r = 0;
    for (std::uint32_t j = 0; j < n_; ++j) r = r * field_->size() + coords[j];
    return r;
  }

  // Canonical direction vector for an index; indices ascend in lexicographic
  // coordinate order.
  void direction(std::uint64_t idx, std::uint32_t* coords) const {
    if (idx >= ndirs_) throw std::out_of_range("direction index out of range");
    std::uint32_t lead = 0;
    for (; lead < n_; ++lead) {
      std::uint64_t block = 1;
      for (std::uint32_t j = lead + 1; j < n_; ++j) block *= field_->size();
      if (idx >= dir_offset_[lead] && idx < dir_offset_[lead] + block) break;
    }
    std::uint64_t suffix = idx - dir_offset_[lead];
    for (std::uint32_t j = 0; j < n_; ++j) coords[j] = 0;
    coords[lead] = field_->one();
    for (std::uint32_t j = n_; j-- > lead + 1;) {
      coords[j] = static_cast<std::uint32_t>(suffix % field_->size());
      suffix /= field_->size();
    }
  }

  std::uint64_t direction_index(const std::uint32_t* canonical_dir) const {
    std::uint32_t lead = 0;
    while (lead < n_ && canonical_dir[lead] == 0) ++lead;
    if (lead == n_) throw std::invalid_argument("direction must be nonzero");
    std::uint64_t suffix = 0;
    for (std::uint32_t j = lead + 1; j < n_; ++j)
      suffix = suffix * field_->size() + canonical_dir[j];
    return dir_offset_[lead] + suffix;
  }

  // Canonical (base rank, direction index) of the line through a point with
  // a (not necessarily canonical) nonzero direction.
  std::pair<std::uint64_t, std::uint64_t> canonicalize_line(const std::uint32_t* point,
                                                            const std::uint32_t* dir_raw) const {
    std::vector<std::uint32_t> d(dir_raw, dir_raw + n_);
    std::uint32_t lead = 0;
    while (lead < n_ && d[lead] == 0) ++lead;
    if (lead == n_) throw std::invalid_argument("direction must be nonzero");
    std::uint32_t s = field_->inv(d[lead]);
    for (std::uint32_t j = 0; j < n_; ++j) d[j] = field_->mul(d[j], s);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint32_t> tmp(n_);
    for (std::uint64_t x = 0; x < field_->size(); ++x) {
      for (std::uint32_t j = 0; j < n_; ++j)
        tmp[j] = field_->add(point[j], field_->mul(static_cast<std::uint32_t>(x), d[j]));
      best = std::min(best, encode(tmp.data()));
    }
    return {best, direction_index(d.data())};
  }

  // Runs fn(dir_idx, base_rank, ranks) once per line with direction index in
  // [d_lo, d_hi); ranks lists the q points along x = 0, 1, ..., so ranks[0]
  // is the canonical base. Sequential; callers shard over directions.
  template <typename Fn>
  void sweep_directions(std::uint64_t d_lo, std::uint64_t d_hi, Fn&& fn) const {
    const std::uint64_t q = field_->size();
    Bitset visited(npoints_);
    std::vector<std::uint32_t> dir(n_), offc(n_ * q), base(n_);
    std::vector<std::uint64_t> ranks(q), offrank(q);
    const bool xor_path = field_->characteristic() == 2;
    for (std::uint64_t di = d_lo; di < d_hi; ++di) {
      visited.clear();
      direction(di, dir.data());
      for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint32_t j = 0; j < n_; ++j)
          offc[x * n_ + j] = field_->mul(static_cast<std::uint32_t>(x), dir[j]);
      if (xor_path)
        for (std::uint64_t x = 0; x < q; ++x) offrank[x] = encode(&offc[x * n_]);
      for (std::uint64_t b = 0; b < npoints_; ++b) {
        if (visited.get(b)) continue;
        if (xor_path) {
          for (std::uint64_t x = 0; x < q; ++x) {
            std::uint64_t r = b ^ offrank[x];
            ranks[x] = r;
            visited.set(r);
          }
        } else {
          decode(b, base.data());
          for (std::uint64_t x = 0; x < q; ++x) {
            std::uint64_t r = 0;
            const std::uint32_t* off = &offc[x * n_];
            for (std::uint32_t j = 0; j < n_; ++j) r = r * q + field_->add(base[j], off[j]);
            ranks[x] = r;
            visited.set(r);
          }
        }
        fn(di, b, ranks.data());
      }
    }
  }

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::uint64_t npoints_ = 0, ndirs_ = 0;
  std::vector<std::uint64_t> dir_offset_;
};

struct LineWitness {
  std::uint64_t base_rank = 0;
  std::uint64_t dir_index = 0;
  std::uint32_t count = 0;  // offending intersection size
  std::uint32_t color = 0;  // offending color, for coloring sweeps

  bool before(const LineWitness& o) const {
    return base_rank != o.base_rank ? base_rank < o.base_rank : dir_index < o.dir_index;
  }
};

struct EvasiveVerdict {
  bool ok = true;
  std::uint32_t max_intersection = 0;
  std::uint64_t lines_swept = 0;
  std::optional<LineWitness> witness;  // least (base, direction) violator
};

// Exhaustive check that every affine line meets the indicator in at most t
// points.
inline EvasiveVerdict sweep_line_evasive(const AffineSpace& S, const Bitset& members,
                                         std::uint32_t t, unsigned workers = 1) {
  const std::uint64_t q = S.q();
  EvasiveVerdict out;
  std::mutex mu;
  run_sharded(S.direction_count(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
    EvasiveVerdict local;
    S.sweep_directions(lo, hi, [&](std::uint64_t di, std::uint64_t base, const std::uint64_t* ranks) {
      std::uint32_t count = 0;
      for (std::uint64_t x = 0; x < q; ++x) count += members.get(ranks[x]);
      ++local.lines_swept;
      if (count > local.max_intersection) local.max_intersection = count;
      if (count > t) {
        LineWitness w{base, di, count, 0};
        if (!local.witness || w.before(*local.witness)) local.witness = w;
      }
    });
    std::lock_guard<std::mutex> g(mu);
    out.lines_swept += local.lines_swept;
    out.max_intersection = std::max(out.max_intersection, local.max_intersection);
    if (local.witness && (!out.witness || local.witness->before(*out.witness)))
      out.witness = local.witness;
  });
  out.ok = !out.witness.has_value();
  return out;
}

struct ColoringSweepResult {
  bool ok = true;  // no monochromatic line
  std::uint32_t max_per_line_per_color = 0;
  std::uint64_t lines_swept = 0;
  std::optional<LineWitness> witness;  // least monochromatic line
};

// Sweeps all lines of a totally colored AG(n, q): reports whether any line
// is monochromatic and the maximum per-line per-color intersection.
inline ColoringSweepResult sweep_affine_coloring(const AffineSpace& S,
                                                 const std::vector<std::uint8_t>& colors,
                                                 std::uint32_t k, unsigned workers = 1) {
  if (colors.size() != S.point_count())
    throw std::invalid_argument("coloring must cover every point");
  const std::uint64_t q = S.q();
  ColoringSweepResult out;
  std::mutex mu;
  run_sharded(S.direction_count(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
    ColoringSweepResult local;
    std::vector<std::uint32_t> per_color(k);
    S.sweep_directions(lo, hi, [&](std::uint64_t di, std::uint64_t base, const std::uint64_t* ranks) {
      std::fill(per_color.begin(), per_color.end(), 0);
      for (std::uint64_t x = 0; x < q; ++x) ++per_color[colors[ranks[x]]];
      ++local.lines_swept;
      for (std::uint32_t c = 0; c < k; ++c) {
        if (per_color[c] > local.max_per_line_per_color)
          local.max_per_line_per_color = per_color[c];
        if (per_color[c] == q) {
          LineWitness w{base, di, per_color[c], c};
          if (!local.witness || w.before(*local.witness)) local.witness = w;
        }
      }
    });
    std::lock_guard<std::mutex> g(mu);
    out.lines_swept += local.lines_swept;
    out.max_per_line_per_color = std::max(out.max_per_line_per_color, local.max_per_line_per_color);
    if (local.witness && (!out.witness || local.witness->before(*out.witness)))
      out.witness = local.witness;
  });
  out.ok = !out.witness.has_value();
  return out;
}

struct CoverageVerdict {
  bool ok = true;  // every outside point sees >= t members on some line
  std::uint64_t outside_points = 0;
  std::optional<std::uint64_t> uncovered;  // least uncovered point rank
};

// Maximality coverage: for every point outside the set, some line through it
// carries at least t members. Scans all canonical directions per point.
inline CoverageVerdict sweep_coverage(const AffineSpace& S, const Bitset& members,
                                      std::uint32_t t, unsigned workers = 1) {
  const std::uint64_t q = S.q();
  CoverageVerdict out;
  std::mutex mu;
  run_sharded(S.point_count(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
    CoverageVerdict local;
    const std::uint32_t n = S.dim();
    std::vector<std::uint32_t> b(n), dir(n), tmp(n);
    for (std::uint64_t pr = lo; pr < hi; ++pr) {
      if (members.get(pr)) continue;
      ++local.outside_points;
      S.decode(pr, b.data());
      bool covered = false;
      for (std::uint64_t di = 0; di < S.direction_count() && !covered; ++di) {
        S.direction(di, dir.data());
        std::uint32_t count = 0;
        for (std::uint64_t x = 1; x < q; ++x) {
          std::uint64_t r = 0;
          for (std::uint32_t j = 0; j < n; ++j)
            r = r * q +
                S.field().add(b[j], S.field().mul(static_cast<std::uint32_t>(x), dir[j]));
          count += members.get(r);
        }
        covered = count >= t;
      }
      if (!covered && !local.uncovered) local.uncovered = pr;
    }
    std::lock_guard<std::mutex> g(mu);
    out.outside_points += local.outside_points;
    if (local.uncovered && (!out.uncovered || *local.uncovered < *out.uncovered))
      out.uncovered = local.uncovered;
  });
  out.ok = !out.uncovered.has_value();
  return out;
}

inline Bitset make_indicator(const AffineSpace& S, const std::vector<std::uint32_t>& points) {
  Bitset b(S.point_count());
  for (auto r : points) {
    if (r >= S.point_count()) throw std::invalid_argument("point rank outside the space");
    b.set(r);
  }
  return b;
}

}  // namespace evasive::geom
