#pragma once

#include <array>
#include <cstdint>

namespace intbm {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/// Deterministic random stream addressed by (master seed, stream index).
///
/// The seed is the Philox key; the stream index fills the upper two counter
/// words and a block index the lower two. Path p of any Monte Carlo run with
/// master seed s draws from stream (s, p), so results do not depend on how
/// paths are scheduled across threads.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1), 53 bits.
  double next_uniform();
  /// Standard normal via Box-Muller; consumes one block per pair.
  double next_normal();

 private:
  void refill();

  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  unsigned used_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace intbm
