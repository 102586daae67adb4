#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nonext {

// Engine output is fixed by the standard; the transforms below avoid the
// implementation-defined distribution classes so samples are reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

  /// Uniform on (0, 1].
  double uniform_open_closed() { return 1.0 - uniform(); }

  /// Standard exponential.
  double exponential();

  /// Uniform integer on [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Seed for an independent stream keyed by name (FNV-1a over the name, mixed
/// with the base seed).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);

}  // namespace nonext
