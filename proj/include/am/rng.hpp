#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "am/rational.hpp"

namespace am {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic random stream. mt19937_64 output is pinned by the standard
// and the bounded draw rejects instead of taking a biased modulo, so runs
// reproduce bit-for-bit across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform draw in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t r = engine_();
    while (r < min) r = engine_();
    return r % bound;
  }

  // exact Bernoulli draw: true with probability num/den
  bool bernoulli(const Rational& p) {
    const BigInt& num = numerator(p);
    const BigInt& den = denominator(p);
    if (num < 0 || num > den)
      throw std::invalid_argument("Rng::bernoulli: probability outside [0,1]");
    if (num == 0) return false;
    if (num == den) return true;
    if (den > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw std::invalid_argument("Rng::bernoulli: denominator too large for an exact draw");
    return below(den.convert_to<std::uint64_t>()) < num.convert_to<std::uint64_t>();
  }

 private:
  std::mt19937_64 engine_;
};

// Independently seeded stream for trial #index, so batched experiments give
// the same results under any trial scheduling.
inline Rng derive_rng(std::uint64_t base, std::uint64_t index) {
  return Rng(splitmix64(base ^ splitmix64(index)));
}

}  // namespace am
