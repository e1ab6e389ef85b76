#pragma once

// Reproducible random streams.
//
// Every stream is identified by (seed, stream_id) and owns an independent
// xoshiro256** state initialized from a SplitMix64 hash of both values. The
// generator, the bounded-integer method (Lemire's multiply-and-reject) and
// the normal sampler (Wichura's AS241 inverse CDF) use only integer
// arithmetic plus log/sqrt, so draws are identical on every platform with
// IEEE-754 doubles and a correctly rounded libm.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace ibi {

/// One step of the SplitMix64 mixer.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for a nested family of streams, e.g. the bootstrap of simulation i.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

/// Standard normal quantile (AS241, ~1e-16 relative accuracy).
double normal_quantile(double p) noexcept;

class SeededRng {
 public:
  using result_type = std::uint64_t;

  SeededRng(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;
  /// Uniform integer in [0, n); n must be > 0.
  std::uint64_t index(std::uint64_t n) noexcept;
  double normal() noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

}  // namespace ibi
