#pragma once

#include <cstdint>
#include <initializer_list>

namespace ergo {

// Deterministic 64-bit generator (splitmix64). Used for solver
// initialization perturbations and randomized tests; avoids the
// implementation-defined std:: distributions so identical seeds give
// identical bytes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

// Mixes extra values into a seed so that nested solver runs (per subset,
// per start) draw independent deterministic streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  Rng r(seed ^ 0x6a09e667f3bcc908ULL);
  std::uint64_t acc = r.next_u64();
  for (std::uint64_t p : parts) {
    Rng s(p + 0x9e3779b97f4a7c15ULL);
    acc = (acc ^ s.next_u64()) * 0x2545f4914f6cdd1dULL;
    acc ^= acc >> 29;
  }
  return acc;
}

}  // namespace ergo
