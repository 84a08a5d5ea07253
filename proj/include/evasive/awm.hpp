#pragma once

// The sum inequality sigma(B)^3 <= m*n*sigma(B B^T B) for nonnegative m x n
// matrices, evaluated in exact integer arithmetic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace evasive::extremal {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct AwmVerdict {
  bool holds = false;
  bool equality = false;
  unsigned __int128 lhs = 0;  // sigma(B)^3
  unsigned __int128 rhs = 0;  // m*n*sigma(B B^T B)
};

inline std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

inline AwmVerdict awm_check(const IntMatrix& B) {
  if (B.empty() || B[0].empty()) throw std::invalid_argument("matrix must be nonempty");
  const std::size_t m = B.size(), n = B[0].size();
  unsigned __int128 sigma = 0;
  for (const auto& row : B) {
    if (row.size() != n) throw std::invalid_argument("matrix rows must have equal length");
    for (auto v : row) {
      if (v < 0) throw std::invalid_argument("matrix entries must be nonnegative");
      sigma += static_cast<unsigned __int128>(v);
    }
  }
  // C = B B^T (m x m), then sigma(C B).
  std::vector<std::vector<unsigned __int128>> C(m, std::vector<unsigned __int128>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        acc += static_cast<unsigned __int128>(B[i][k]) * static_cast<unsigned __int128>(B[j][k]);
      C[i][j] = acc;
    }
  unsigned __int128 sigma_bbtb = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < m; ++j)
        acc += C[i][j] * static_cast<unsigned __int128>(B[j][k]);
      sigma_bbtb += acc;
    }
  AwmVerdict out;
  out.lhs = sigma * sigma * sigma;
  out.rhs = static_cast<unsigned __int128>(m) * static_cast<unsigned __int128>(n) * sigma_bbtb;
  out.holds = out.lhs <= out.rhs;
  out.equality = out.lhs == out.rhs;
  return out;
}

}  // namespace evasive::extremal
