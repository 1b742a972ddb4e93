#pragma once

// Fixed-seed pseudo-random inputs. The raw mt19937_64 stream is fully
// specified by the standard; values are mapped to ranges by plain modular
// reduction (distribution objects are implementation-defined), so the same
// seed gives the same inputs on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "compsum/rational.hpp"
#include "compsum/spectral.hpp"

namespace compsum {

/// Seed used by the test and acceptance suites unless stated otherwise.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

class FixedSeedRng {
 public:
  explicit FixedSeedRng(std::uint64_t seed) : engine_(seed) {}

  /// Integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with p in [-num_bound, num_bound], q in [1, den_bound].
  Rational rational(long num_bound, long den_bound) {
    const long p = uniform(-num_bound, num_bound);
    const long q = uniform(1, den_bound);
    return ratio(p, q);
  }

 private:
  std::mt19937_64 engine_;
};

inline Potential<Rational> random_potential(FixedSeedRng& rng, int order, long num_bound = 5, long den_bound = 4) {
  std::vector<Rational> u;
  for (int k = 0; k < order; ++k) u.push_back(rng.rational(num_bound, den_bound));
  return Potential<Rational>(std::move(u));
}

/// Entries drawn from {-2, ..., 2}.
inline CoefficientArray<Rational> random_coefficient_array(FixedSeedRng& rng, int bound) {
  CoefficientArray<Rational> a(bound);
  for (int k = 1; k <= bound; ++k)
    for (int j = 0; j < k; ++j) a.set(j, k, Rational(rng.uniform(-2, 2)));
  return a;
}

}  // namespace compsum
