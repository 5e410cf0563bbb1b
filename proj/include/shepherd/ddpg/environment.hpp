#pragma once

#include <span>
#include <vector>

#include "shepherd/random.hpp"

namespace shepherd::ddpg {

struct StepResult {
  std::vector<double> next_state;
  double reward = 0.0;
  bool terminal = false;  // target state reached; no bootstrapping past it
};

/// Episodic task driven by run_episode.
class Environment {
 public:
  virtual ~Environment() = default;
  /// Starts a new episode. Any randomness must come from `rng`.
  virtual std::vector<double> reset(Rng& rng) = 0;
  virtual StepResult step(std::span<const double> action) = 0;
};

}  // namespace shepherd::ddpg
