#pragma once

#include <cstdint>

namespace lln {

// Deterministic splittable generator: PCG32 (pcg_xsh_rr_64_32).
// A (seed, stream) pair fully determines the draw sequence, so every
// node/layer owns an independent stream derived from the scenario seed.
// The algorithm is fixed; changing it silently would break run
// reproducibility guarantees.
class SeededRng {
public:
  SeededRng() : SeededRng(0, 0) {}
  SeededRng(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform01();
  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // True with probability p (p <= 0 never, p >= 1 always).
  bool chance(double p);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

// SplitMix64 step, used to whiten seeds before feeding PCG state.
std::uint64_t splitmix64(std::uint64_t &state);

} // namespace lln
