#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace evasive {

// Thrown when a requested object would exceed a configured size cap.
// Callers distinguish this from a plain precondition violation so the CLI
// can map it to a resource-error exit code.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

inline std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp,
                                     std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (v > limit / base) throw CapError("power exceeds limit " + std::to_string(limit));
    v *= base;
  }
  return v;
}

inline std::uint64_t binom2(std::uint64_t x) { return x * (x - 1) / 2; }

// Default cap on the number of points of any space handled exhaustively.
constexpr std::uint64_t kDefaultPointCap = std::uint64_t{1} << 24;

// Dense bit indicator keyed by point rank. The line sweeps test membership
// once per (line, point) visit, so this wants to stay an array of words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool get(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  std::uint64_t size() const { return n_; }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto x : w_) c += static_cast<std::uint64_t>(__builtin_popcountll(x));
    return c;
  }

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// FNV-1a, used for certificate digests of exported artifacts.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

// Runs fn(shard_begin, shard_end) over [0, total) split into `workers`
// contiguous ranges. workers == 1 runs inline; results are merged by the
// caller, so fn must only touch per-shard state.
template <typename Fn>
void run_sharded(std::uint64_t total, unsigned workers, Fn&& fn) {
  if (workers <= 1 || total < 2) {
    fn(std::uint64_t{0}, total);
    return;
  }
  if (workers > total) workers = static_cast<unsigned>(total);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned wi = 0; wi < workers; ++wi) {
    std::uint64_t lo = wi * chunk;
    std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace evasive
