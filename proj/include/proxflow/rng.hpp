#pragma once

#include <cstdint>
#include <random>

#include "proxflow/vec.hpp"

namespace proxflow {

// Seeded RNG with a fixed uint64 -> double mapping so that sampled
// positions are bitwise reproducible for a given seed and build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Vec uniform_in_box(const Vec& lo, const Vec& hi) {
    Vec p(lo.dim());
    for (int i = 0; i < lo.dim(); ++i) p[i] = uniform(lo[i], hi[i]);
    return p;
  }

  Vec unit_vector(int d) {
    // Rejection from the cube, avoids trig and is reproducible.
    while (true) {
      Vec v(d);
      for (int i = 0; i < d; ++i) v[i] = uniform(-1.0, 1.0);
      const double n2 = norm2(v);
      if (n2 > 1e-12 && n2 <= 1.0) return (1.0 / std::sqrt(n2)) * v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace proxflow
