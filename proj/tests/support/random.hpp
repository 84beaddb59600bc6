#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padic/exactnum.hpp"
#include "padic/polygon.hpp"

namespace padic::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  BigInt big(int max_bits) {
    BigInt n = 0;
    const int words = between(1, (max_bits + 30) / 31);
    for (int i = 0; i < words; ++i) n = n * (1L << 31) + between(0, (1L << 31) - 1);
    return between(0, 1) ? n : BigInt(-n);
  }

  BigRational rational(int max_bits) {
    BigInt den = big(max_bits);
    if (den < 0) den = -den;
    return BigRational(big(max_bits), den + 1);
  }

  std::vector<Point> points(std::size_t max_count, std::int64_t lo, std::int64_t hi) {
    std::vector<Point> pts(static_cast<std::size_t>(between(1, static_cast<std::int64_t>(max_count))));
    for (auto& p : pts) p = {between(lo, hi), between(lo, hi)};
    return pts;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace padic::testing
