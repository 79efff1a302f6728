#pragma once

#include <cstdint>
#include <random>

#include "apu/rational.hpp"

namespace apu {

/// Seeded generator with bit-exact cross-platform behavior. mt19937_64 output
/// is fully specified by the standard; the bounded draws below avoid
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n), unbiased rejection sampling. n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do { x = eng_(); } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng_() >> 63) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Bernoulli(p) threshold on the full 64-bit word: floor(p * 2^64).
/// Exact when den(p) divides 2^64; otherwise off by < 2^-64.
inline std::uint64_t bernoulli_threshold(const Rational& p) {
  if (!(p > Rational(0) && p < Rational(1)))
    throw std::domain_error("bernoulli_threshold: p must lie in (0,1)");
  Int t = (p.num() << 64) / p.den();
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, t.get_mpz_t());
  return out;
}

}  // namespace apu
