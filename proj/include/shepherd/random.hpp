#pragma once

#include <cstdint>
#include <random>

namespace shepherd {

/// The single generator type used for every stochastic choice.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace shepherd
