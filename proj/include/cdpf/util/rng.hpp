#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace cdpf {

// Counter-based Philox4x32-10 stream.  Substreams are addressed by
// (seed, tag): the key is a 64-bit FNV-1a hash of both, so independent
// purposes ("truth", "pf", ...) never share a stream and any draw is
// reproducible regardless of thread scheduling.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view tag) : counter_{0, 0, 0, 0} {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint8_t byte) {
      h ^= byte;
      h *= 0x100000001b3ULL;
    };
    for (int i = 0; i < 8; ++i) mix(static_cast<std::uint8_t>(seed >> (8 * i)));
    for (char ch : tag) mix(static_cast<std::uint8_t>(ch));
    key_[0] = static_cast<std::uint32_t>(h);
    key_[1] = static_cast<std::uint32_t>(h >> 32);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1); never returns 0 (safe under log()).
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; draws are consumed in pairs.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t next_u64() {
    if (have_word_) {
      have_word_ = false;
      return word_;
    }
    std::uint32_t c0 = counter_[0], c1 = counter_[1], c2 = counter_[2],
                  c3 = counter_[3];
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ULL * c0;
      const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      c0 = hi1 ^ c1 ^ k0;
      c2 = hi0 ^ c3 ^ k1;
      c1 = lo1;
      c3 = lo0;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    advance_counter();
    word_ = (static_cast<std::uint64_t>(c2) << 32) | c3;
    have_word_ = true;
    return (static_cast<std::uint64_t>(c0) << 32) | c1;
  }

 private:
  void advance_counter() {
    for (int i = 0; i < 4; ++i) {
      if (++counter_[i] != 0) break;
    }
  }

  std::uint32_t counter_[4];
  std::uint32_t key_[2];
  bool have_word_ = false;
  std::uint64_t word_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cdpf
