#pragma once

#include <cstdint>
#include <random>

namespace melodynet {

// splitmix64 finalizer; decorrelates seed material before it feeds a stream.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and up to three
// stream coordinates (e.g. (seed, k, restart)). Streams are never shared.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = mix64(base);
  h = mix64(h + 0x100 + a);
  h = mix64(h + 0x200 + b);
  h = mix64(h + 0x300 + c);
  return h;
}

// Uniform double in [0, 1). std::uniform_real_distribution is
// implementation-defined; this mapping is bit-stable everywhere.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n), n >= 1, by rejection.
inline int uniform_below(std::mt19937_64& gen, int n) {
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return static_cast<int>(x % un);
}

}  // namespace melodynet
