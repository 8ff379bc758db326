#pragma once

#include <cstdint>
#include <random>

#include "metallic/quadfield.hpp"

// Deterministic RNG helpers shared by the test binaries; every test fixes
// its own seed so failures are reproducible.
namespace testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Random rational in [0, 1) with denominator at most max_den.
inline metallic::Rat rand_rat01(std::mt19937_64& g, long max_den = 9973) {
  std::uniform_int_distribution<long> dq(1, max_den);
  long q = dq(g);
  std::uniform_int_distribution<long> dp(0, q - 1);
  metallic::Rat r(dp(g), q);
  r.canonicalize();
  return r;
}

// Random rational in [-bound, bound].
inline metallic::Rat rand_rat(std::mt19937_64& g, long bound = 50, long max_den = 97) {
  std::uniform_int_distribution<long> dq(1, max_den);
  long q = dq(g);
  std::uniform_int_distribution<long> dp(-bound * q, bound * q);
  metallic::Rat r(dp(g), q);
  r.canonicalize();
  return r;
}

inline metallic::QuadNum rand_quad(std::mt19937_64& g, int n) {
  return metallic::QuadNum(rand_rat(g), rand_rat(g), n);
}

}  // namespace testutil
