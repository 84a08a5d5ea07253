#pragma once

// Linear representation of a point set S in PG(n, q): the bipartite
// incidence graph whose left vertices are the q^{n+1} affine points of
// PG(n+1, q) and whose right vertices are the lines of PG(n+1, q) meeting
// the hyperplane at infinity in exactly one point, that point in S. Right
// vertices are exactly the affine lines of AG(n+1, q) whose direction class
// lies in S, so they are enumerated per direction with the canonical-base
// walk.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "evasive/affine.hpp"
#include "evasive/projective.hpp"
#include "evasive/util.hpp"

namespace evasive::extremal {

struct BipartiteGraph {
  std::uint32_t n_left = 0, n_right = 0;
  std::vector<std::vector<std::uint32_t>> adj_left, adj_right;  // sorted ranks

  void init(std::uint32_t nl, std::uint32_t nr) {
    n_left = nl;
    n_right = nr;
    adj_left.assign(nl, {});
    adj_right.assign(nr, {});
  }

  void add_edge(std::uint32_t l, std::uint32_t r) {
    adj_left[l].push_back(r);
    adj_right[r].push_back(l);
  }

  void finalize() {
    for (auto& v : adj_left) std::sort(v.begin(), v.end());
    for (auto& v : adj_right) std::sort(v.begin(), v.end());
  }

  std::uint64_t edge_count() const {
    std::uint64_t e = 0;
    for (const auto& v : adj_left) e += v.size();
    return e;
  }

  bool adjacent(std::uint32_t l, std::uint32_t r) const {
    const auto& v = adj_left[l];
    return std::binary_search(v.begin(), v.end(), r);
  }
};

struct LinearRepGraph {
  std::uint32_t n = 0;   // dimension of the hyperplane PG(n, q) holding S
  std::uint64_t q = 0;
  std::uint32_t s_size = 0;
  BipartiteGraph g;  // left: affine points; right: lines, |S| * q^n of them
};

inline LinearRepGraph linear_representation(const geom::ProjectiveSpace& hyperplane,
                                            const std::vector<std::uint64_t>& s_ranks,
                                            std::uint64_t cap = geom::kDefaultPointCap) {
  if (s_ranks.empty()) throw std::invalid_argument("point set must be nonempty");
  const std::uint32_t n = hyperplane.dim();
  geom::AffineSpace ambient(hyperplane.field_ptr(), n + 1, cap);
  const std::uint64_t q = ambient.q();
  const std::uint64_t lines_per_dir = ambient.point_count() / q;
  if (s_ranks.size() * lines_per_dir + ambient.point_count() > cap)
    throw CapError("linear representation exceeds the point cap");

  LinearRepGraph rep;
  rep.n = n;
  rep.q = q;
  rep.s_size = static_cast<std::uint32_t>(s_ranks.size());
  rep.g.init(static_cast<std::uint32_t>(ambient.point_count()),
             static_cast<std::uint32_t>(s_ranks.size() * lines_per_dir));

  std::vector<std::uint32_t> dir(n + 1);
  Bitset visited(ambient.point_count());
  std::vector<std::uint32_t> offc((n + 1) * q);
  for (std::uint32_t si = 0; si < s_ranks.size(); ++si) {
    // The direction class of the lines through infinity point s is the
    // normalized coordinate vector of s itself.
    hyperplane.decode(s_ranks[si], dir.data());
    visited.clear();
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::uint32_t j = 0; j <= n; ++j)
        offc[x * (n + 1) + j] = ambient.field().mul(static_cast<std::uint32_t>(x), dir[j]);
    std::uint32_t line_id = static_cast<std::uint32_t>(si * lines_per_dir);
    std::vector<std::uint32_t> base(n + 1);
    for (std::uint64_t b = 0; b < ambient.point_count(); ++b) {
      if (visited.get(b)) continue;
      ambient.decode(b, base.data());
      for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t r = 0;
        for (std::uint32_t j = 0; j <= n; ++j)
          r = r * q + ambient.field().add(base[j], offc[x * (n + 1) + j]);
        visited.set(r);
        rep.g.add_edge(static_cast<std::uint32_t>(r), line_id);
      }
      ++line_id;
    }
  }
  rep.g.finalize();
  return rep;
}

struct DegreeCheck {
  bool ok = true;
  std::uint64_t point_vertices = 0, line_vertices = 0, edges = 0;
};

// Degree facts of a linear representation: point vertices of degree |S|,
// line vertices of degree q, |S| * q^{n+1} edges.
inline DegreeCheck check_degrees(const LinearRepGraph& rep) {
  DegreeCheck out;
  out.point_vertices = rep.g.n_left;
  out.line_vertices = rep.g.n_right;
  out.edges = rep.g.edge_count();
  for (const auto& v : rep.g.adj_left)
    if (v.size() != rep.s_size) out.ok = false;
  for (const auto& v : rep.g.adj_right)
    if (v.size() != rep.q) out.ok = false;
  std::uint64_t expect_points = 1;
  for (std::uint32_t j = 0; j <= rep.n; ++j) expect_points *= rep.q;
  if (out.point_vertices != expect_points) out.ok = false;
  if (out.line_vertices != rep.s_size * (expect_points / rep.q)) out.ok = false;
  if (out.edges != rep.s_size * expect_points) out.ok = false;
  return out;
}

}  // namespace evasive::extremal
