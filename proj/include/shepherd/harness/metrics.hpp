#pragma once

#include <string>
#include <vector>

#include "shepherd/vec2.hpp"

namespace shepherd::harness {

/// One simulated mission step. Positions are after the step unless noted.
struct StepRecord {
  int step = 0;                // 1-based
  Vec2 dog_before;             // shepherd position at the start of the step
  Vec2 velocity;               // commanded shepherd velocity, m/s
  Vec2 dog;                    // shepherd position after the step
  std::vector<Vec2> sheep;
  Vec2 cm;
  Vec2 subgoal;                // sub-goal targeted during the step
  std::string skill;           // active behaviour name
  double reward = 0.0;
};

struct MissionTrace {
  double dt = 0.1;
  int n_sheep = 0;
  Vec2 goal;
  Vec2 initial_dog;
  Vec2 initial_cm;
  std::vector<StepRecord> steps;
};

struct TrialResult {
  bool success = false;
  int n_steps = 0;
  double travel_distance = 0.0;
  double error_per_step = 0.0;
  double dog_subgoal_per_step = 0.0;
  double cm_target_reduction_per_step = 0.0;
  double cumulative_reward = 0.0;
};

/// Travel distance, mean actuation error, mean shepherd/sub-goal gap and
/// mean per-step reduction of the centre-to-goal distance. `success` is left
/// false for the caller to set. Throws InvalidInput on an empty trace.
TrialResult compute_metrics(const MissionTrace& trace);

}  // namespace shepherd::harness
