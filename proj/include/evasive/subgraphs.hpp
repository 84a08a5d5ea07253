#pragma once

// C4 and theta_{3,t} detection on bipartite graphs.
//
// C4: two vertices with two common neighbors; detected by counting neighbor
// pairs from the right side.
//
// theta_{3,t}: two vertices joined by t internally vertex-disjoint paths of
// length 3. Endpoints of 3-paths sit on opposite sides. The screen counts
// 3-paths per cross pair (walks minus the degenerate ones through an edge);
// at most t-1 everywhere rules the subgraph out. When some pair exceeds the
// screen, the exact stage decides it: the middle edges of internally
// disjoint 3-paths between p and l form a matching between N(p)\{l} and
// N(l)\{p}, so a maximum bipartite matching of size >= t is the criterion.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "evasive/linear_rep.hpp"

namespace evasive::extremal {

struct C4Witness {
  std::uint32_t left_a = 0, left_b = 0, right_a = 0, right_b = 0;
};

struct C4Verdict {
  bool free = true;
  std::optional<C4Witness> witness;
};

inline C4Verdict check_c4_free(const BipartiteGraph& g) {
  C4Verdict out;
  std::unordered_map<std::uint64_t, std::uint32_t> seen;  // left pair -> right vertex
  seen.reserve(g.n_right * 4);
  for (std::uint32_t r = 0; r < g.n_right; ++r) {
    const auto& nb = g.adj_right[r];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        std::uint64_t key = (static_cast<std::uint64_t>(nb[i]) << 32) | nb[j];
        auto it = seen.find(key);
        if (it != seen.end()) {
          out.free = false;
          out.witness = C4Witness{nb[i], nb[j], it->second, r};
          return out;
        }
        seen.emplace(key, r);
      }
    }
  }
  return out;
}

struct PathProfile {
  std::uint32_t max_paths = 0;  // max 3-paths over cross pairs
  std::vector<std::pair<std::uint32_t, std::uint32_t>> over;  // pairs with >= threshold paths
};

// 3-path counts between every (left, right) pair; pairs reaching `threshold`
// are collected. Degenerate walks through an edge (back over the edge) are
// subtracted, so adjacent pairs report true path counts too.
inline PathProfile path3_profile(const BipartiteGraph& g, std::uint32_t threshold) {
  PathProfile prof;
  std::vector<std::uint32_t> two_walks(g.n_left);
  std::vector<std::uint32_t> walks(g.n_right);
  std::vector<std::uint32_t> touched_mid, touched_right;
  for (std::uint32_t p = 0; p < g.n_left; ++p) {
    touched_mid.clear();
    for (auto l2 : g.adj_left[p]) {
      for (auto p2 : g.adj_right[l2]) {
        if (two_walks[p2] == 0) touched_mid.push_back(p2);
        ++two_walks[p2];
      }
    }
    touched_right.clear();
    for (auto p2 : touched_mid) {
      if (p2 == p) continue;  // walks returning through p are not paths
      for (auto l : g.adj_left[p2]) {
        if (walks[l] == 0) touched_right.push_back(l);
        walks[l] += two_walks[p2];
      }
    }
    for (auto l : touched_right) {
      std::uint32_t count = walks[l];
      if (g.adjacent(p, l)) {
        // Remove walks whose middle edge is the (p, l) edge itself:
        // p-l-p2-l with p2 on l, and p-l2-p-l already excluded above.
        count -= static_cast<std::uint32_t>(g.adj_right[l].size()) - 1;
      }
      if (count > prof.max_paths) prof.max_paths = count;
      if (count >= threshold) prof.over.emplace_back(p, l);
      walks[l] = 0;
    }
    for (auto p2 : touched_mid) two_walks[p2] = 0;
  }
  return prof;
}

namespace detail {

// Kuhn's augmenting-path matching on the bipartite graph between
// left candidates (mid-left vertices) and right candidates (mid-right),
// with adjacency from g.
inline std::uint32_t max_matching(const BipartiteGraph& g,
                                  const std::vector<std::uint32_t>& mids_left,
                                  const std::vector<std::uint32_t>& mids_right) {
  std::unordered_map<std::uint32_t, std::uint32_t> right_index;
  for (std::uint32_t i = 0; i < mids_right.size(); ++i) right_index.emplace(mids_right[i], i);
  std::vector<std::int32_t> match_right(mids_right.size(), -1);
  std::vector<char> used;
  std::vector<std::vector<std::uint32_t>> cand(mids_left.size());
  for (std::uint32_t i = 0; i < mids_left.size(); ++i)
    for (auto l : g.adj_left[mids_left[i]]) {
      auto it = right_index.find(l);
      if (it != right_index.end()) cand[i].push_back(it->second);
    }
  std::uint32_t matched = 0;
  std::function<bool(std::uint32_t)> augment = [&](std::uint32_t i) -> bool {
    for (auto j : cand[i]) {
      if (used[j]) continue;
      used[j] = 1;
      if (match_right[j] < 0 || augment(static_cast<std::uint32_t>(match_right[j]))) {
        match_right[j] = static_cast<std::int32_t>(i);
        return true;
      }
    }
    return false;
  };
  for (std::uint32_t i = 0; i < mids_left.size(); ++i) {
    used.assign(mids_right.size(), 0);
    if (augment(i)) ++matched;
  }
  return matched;
}

}  // namespace detail

struct ThetaVerdict {
  bool free = true;
  std::string stage;  // "screen" or "exact"
  std::uint32_t max_paths = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_pair;  // (left, right)
};

// Exact decision at every cross pair, bypassing the screen: runs the
// disjoint-path matching for all (left, right) pairs.
inline ThetaVerdict check_theta3_free_exact(const BipartiteGraph& g, std::uint32_t t) {
  if (t < 2) throw std::invalid_argument("theta parameter must be at least 2");
  ThetaVerdict out;
  out.stage = "exact";
  out.max_paths = path3_profile(g, ~0u).max_paths;
  std::vector<std::uint32_t> mids_right, mids_left;
  for (std::uint32_t p = 0; p < g.n_left; ++p) {
    for (std::uint32_t l = 0; l < g.n_right; ++l) {
      mids_right.clear();
      mids_left.clear();
      for (auto l2 : g.adj_left[p])
        if (l2 != l) mids_right.push_back(l2);
      for (auto p2 : g.adj_right[l])
        if (p2 != p) mids_left.push_back(p2);
      if (detail::max_matching(g, mids_left, mids_right) >= t) {
        out.free = false;
        out.witness_pair = {p, l};
        return out;
      }
    }
  }
  return out;
}

// Decides theta_{3,t} freeness; t >= 2.
inline ThetaVerdict check_theta3_free(const BipartiteGraph& g, std::uint32_t t) {
  if (t < 2) throw std::invalid_argument("theta parameter must be at least 2");
  ThetaVerdict out;
  PathProfile prof = path3_profile(g, t);
  out.max_paths = prof.max_paths;
  if (prof.over.empty()) {
    out.stage = "screen";
    return out;
  }
  out.stage = "exact";
  for (auto [p, l] : prof.over) {
    std::vector<std::uint32_t> mids_right;  // lines adjacent to p, not l
    for (auto l2 : g.adj_left[p])
      if (l2 != l) mids_right.push_back(l2);
    std::vector<std::uint32_t> mids_left;  // points on l, not p
    for (auto p2 : g.adj_right[l])
      if (p2 != p) mids_left.push_back(p2);
    if (detail::max_matching(g, mids_left, mids_right) >= t) {
      out.free = false;
      out.witness_pair = {p, l};
      return out;
    }
  }
  return out;
}

}  // namespace evasive::extremal
