#include "hecke/rng.hpp"

#include <stdexcept>

namespace hecke {

namespace {
__extension__ typedef unsigned __int128 u128;
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kStreamSalt = 0xd1b54a32d192ed03ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t Stream::derive_key(std::uint64_t seed, std::uint64_t stream_index) {
  return mix64(mix64(seed + kGolden) ^ mix64((stream_index + 1) * kStreamSalt));
}

Stream::Stream(std::uint64_t seed, std::uint64_t stream_index)
    : key_(derive_key(seed, stream_index)) {}

std::uint64_t Stream::next() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

std::uint64_t Stream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Stream::below: bound must be positive");
  // Lemire's multiply-shift with rejection.
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

int Stream::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Stream::uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  return static_cast<int>(lo + static_cast<std::int64_t>(below(span)));
}

double Stream::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace hecke
