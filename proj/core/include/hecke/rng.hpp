#pragma once

#include <cstdint>

namespace hecke {

/// Counter-based random stream.
///
/// The i-th output of a stream is a pure function of (key, i), where the key
/// is derived from a base seed and a stream index (usually a trial number).
/// Trial t of a Monte Carlo run therefore sees the same numbers no matter
/// which worker thread executes it or in which order trials are scheduled.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_index);

  /// Key of the stream for (seed, stream_index); also used as the per-trial
  /// seed recorded in sample output.
  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next();

  /// Uniform integer in [0, bound), unbiased. bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace hecke
