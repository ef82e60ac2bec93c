#pragma once

// Seedable, fully specified random number generation. Every algorithm here is
// fixed by this header alone (no std:: distributions), so identical seeds give
// bit-identical streams on every platform and compiler.
//
// Stream layout: Rng(seed) is the root stream of a seed. Independent
// substreams (one per Monte Carlo trial, per sweep cell, ...) are derived as
// Rng::substream(seed, k); the derivation hashes (seed, k) with the SplitMix64
// finalizer, so substreams never depend on how many draws other streams made.

#include <cmath>
#include <cstdint>

namespace edimlab {

namespace detail {

// SplitMix64 finalizer (Stafford variant 13); a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t rotl64(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// SplitMix64 sequence generator, used to expand seeds.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256++ (Blackman & Vigna). State seeded via SplitMix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  // Substream k of a seed: hash-chain the seed and the stream index, then
  // seed a fresh generator. Distinct k always give distinct derived seeds.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = detail::mix64(seed + detail::kGolden);
    z = detail::mix64(z + stream * 0xD2B74407B1CE6E93ULL + detail::kGolden);
    return Rng(z);
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = detail::rotl64(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl64(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits: (x >> 11) * 2^-53.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // One Bernoulli(p) draw, defined as next_unit() < p.
  bool bernoulli(double p) noexcept { return next_unit() < p; }

  // Unbiased uniform integer in [0, bound), bound >= 1. Lemire's method.
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t s_[4];
};

// Precomputed threshold form of bernoulli(p) for hot loops. Accepting
// (x >> 11) < ceil(p * 2^53) is exactly equivalent to next_unit() < p.
class BernoulliDraw {
 public:
  explicit BernoulliDraw(double p) noexcept
      : threshold_(p >= 1.0 ? (1ULL << 53)
                            : static_cast<std::uint64_t>(
                                  std::ceil(p * 0x1.0p53))) {}

  bool operator()(Rng& rng) const noexcept {
    return (rng.next_u64() >> 11) < threshold_;
  }

 private:
  std::uint64_t threshold_;
};

}  // namespace edimlab
