#pragma once

// Counter-based random streams and the exact samplers used by the
// simulators. Philox4x32-10 (Salmon et al., SC'11) keyed by the master
// seed; the 128-bit counter is split into a 64-bit draw index and a
// 64-bit lane derived from (experiment, replication, purpose). Distinct
// lanes therefore never overlap and results are independent of thread
// scheduling.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace qbalance {

/// Identifies one logical random stream within a run.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint32_t experiment_id = 0;   // < 2^24
  std::uint32_t replication_index = 0;
  std::uint8_t purpose_tag = 0;
};

namespace detail {

inline constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
inline constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
  const std::uint64_t prod0 = static_cast<std::uint64_t>(kPhiloxM4x32A) * ctr[0];
  const std::uint64_t prod1 = static_cast<std::uint64_t>(kPhiloxM4x32B) * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(prod0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(prod0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(prod1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(prod1);
  const std::uint32_t out0 = hi1 ^ ctr[1] ^ key[0];
  const std::uint32_t out2 = hi0 ^ ctr[3] ^ key[1];
  ctr[0] = out0;
  ctr[1] = lo1;
  ctr[2] = out2;
  ctr[3] = lo0;
}

inline void philox10(const std::uint32_t ctr_in[4], const std::uint32_t key_in[2],
                     std::uint32_t out[4]) {
  std::uint32_t key[2] = {key_in[0], key_in[1]};
  out[0] = ctr_in[0];
  out[1] = ctr_in[1];
  out[2] = ctr_in[2];
  out[3] = ctr_in[3];
  for (int r = 0; r < 10; ++r) {
    philox_round(out, key);
    key[0] += kPhiloxW32A;
    key[1] += kPhiloxW32B;
  }
}

}  // namespace detail

/// One Philox stream. Copyable value type; a copy continues the draw
/// sequence independently from the point of the copy.
class RandomStream {
 public:
  explicit RandomStream(const StreamKey& k) {
    if (k.experiment_id >= (1u << 24))
      throw std::invalid_argument("StreamKey: experiment_id must be < 2^24");
    key_[0] = static_cast<std::uint32_t>(k.master_seed);
    key_[1] = static_cast<std::uint32_t>(k.master_seed >> 32);
    lane_lo_ = k.replication_index;
    lane_hi_ = (k.experiment_id << 8) | k.purpose_tag;
  }

  explicit RandomStream(std::uint64_t master_seed)
      : RandomStream(StreamKey{master_seed, 0, 0, 0}) {}

  std::uint64_t next_u64() {
    if (avail_ == 0) refill();
    --avail_;
    const std::uint32_t lo = block_[2 * avail_];
    const std::uint32_t hi = block_[2 * avail_ + 1];
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }
  result_type operator()() { return next_u64(); }

 private:
  void refill() {
    const std::uint32_t ctr[4] = {static_cast<std::uint32_t>(draws_),
                                  static_cast<std::uint32_t>(draws_ >> 32), lane_lo_, lane_hi_};
    detail::philox10(ctr, key_, block_);
    ++draws_;
    avail_ = 2;
  }

  std::uint32_t key_[2] = {0, 0};
  std::uint32_t lane_lo_ = 0;
  std::uint32_t lane_hi_ = 0;
  std::uint64_t draws_ = 0;
  std::uint32_t block_[4] = {0, 0, 0, 0};
  int avail_ = 0;
};

/// Exact Binomial(n, p) sample by sequential inversion of the pmf
/// recurrence, flipped to the smaller tail so the expected work is
/// n*min(p,1-p). No normal approximation anywhere.
template <class Rng>
int binomial(int n, double p, Rng& rng) {
  assert(n >= 0);
  assert(p >= 0.0 && p <= 1.0);
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  // (1-q)^n underflows for very large n; split and sum in that case.
  if (n > 600) return binomial(n / 2, p, rng) + binomial(n - n / 2, p, rng);

  const bool flipped = p > 0.5;
  const double q = flipped ? 1.0 - p : p;
  const double ratio = q / (1.0 - q);
  const double u = rng.uniform01();

  double pmf = std::exp(static_cast<double>(n) * std::log1p(-q));
  double cdf = pmf;
  int k = 0;
  while (u >= cdf && k < n) {
    pmf *= ratio * static_cast<double>(n - k) / static_cast<double>(k + 1);
    ++k;
    cdf += pmf;
  }
  return flipped ? n - k : k;
}

/// Number of Bernoulli(p) trials up to and including the first success.
template <class Rng>
int geometric_attempts(double p, Rng& rng) {
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("geometric_attempts: p must be in (0, 1]");
  if (p == 1.0) return 1;
  const double u = rng.uniform01();
  // Inversion: k = ceil(ln(1-u)/ln(1-p)); u < 1 so the logs are finite.
  const double k = std::ceil(std::log1p(-u) / std::log1p(-p));
  if (k < 1.0) return 1;
  if (k > 2147483000.0) return 2147483000;  // astronomically unlikely for any tested p
  return static_cast<int>(k);
}

}  // namespace qbalance
