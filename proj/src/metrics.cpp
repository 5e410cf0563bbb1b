#include "shepherd/harness/metrics.hpp"

#include "shepherd/errors.hpp"

namespace shepherd::harness {

TrialResult compute_metrics(const MissionTrace& trace) {
  if (trace.steps.empty()) throw InvalidInput("compute_metrics: empty trace");
  TrialResult r;
  const auto n = static_cast<double>(trace.steps.size());
  double error_sum = 0.0;
  double gap_sum = 0.0;
  for (const auto& s : trace.steps) {
    r.travel_distance += distance(s.dog, s.dog_before);
    error_sum += distance(s.dog_before + trace.dt * s.velocity, s.dog);
    gap_sum += distance(s.dog_before, s.subgoal);
    r.cumulative_reward += s.reward;
  }
  r.n_steps = static_cast<int>(trace.steps.size());
  r.error_per_step = error_sum / n;
  r.dog_subgoal_per_step = gap_sum / n;
  r.cm_target_reduction_per_step =
      (distance(trace.initial_cm, trace.goal) - distance(trace.steps.back().cm, trace.goal)) / n;
  return r;
}

}  // namespace shepherd::harness
