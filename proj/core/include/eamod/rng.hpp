#pragma once

#include <cstdint>

namespace eamod {

/// Counter-based generator: value i of stream (seed, stream) is a pure function
/// of (seed, stream, i), so draws can be reproduced out of order or in parallel.
class CounterRng {
 public:
  constexpr explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t at(std::uint64_t counter) const {
    return mix(key_ + counter * 0xd1b54a32d192ed03ULL);
  }

  constexpr std::uint64_t next() { return at(counter_++); }

  /// Uniform in [0, bound); bound must be nonzero.
  constexpr std::uint64_t below(std::uint64_t bound) {
    // rejection keeps the distribution exact
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  constexpr std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace eamod
