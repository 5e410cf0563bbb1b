#include "shepherd/shepherd_baseline.hpp"

#include <algorithm>
#include <cmath>

#include "shepherd/errors.hpp"

namespace shepherd {

const char* to_string(BehaviorKind b) {
  return b == BehaviorKind::Driving ? "driving" : "collecting";
}

double flock_threshold(std::size_t n_sheep, const SwarmParams& params) {
  if (n_sheep < 1) throw InvalidInput("flock_threshold: need at least one sheep");
  if (params.f_n_override) return *params.f_n_override;
  return params.r_sheep_sheep * std::pow(static_cast<double>(n_sheep), 2.0 / 3.0);
}

namespace {

// Distances this close count as a tie (two-sheep flocks tie exactly).
constexpr double kTieTolerance = 1e-12;

}  // namespace

std::size_t furthest_sheep(const FlockState& flock) {
  const Vec2 com = center_of_mass(flock);
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t i = 0; i < flock.size(); ++i) {
    const double d = distance(flock.sheep[i].position, com);
    if (d > best_d + kTieTolerance * std::max(1.0, best_d)) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

BehaviorKind select_behavior(const FlockState& flock, const SwarmParams& params) {
  const Vec2 com = center_of_mass(flock);
  const double limit = flock_threshold(flock.size(), params);
  for (const auto& s : flock.sheep)
    if (distance(s.position, com) > limit) return BehaviorKind::Collecting;
  return BehaviorKind::Driving;
}

Vec2 driving_point(const Vec2& com, const Vec2& goal, std::size_t n_sheep,
                   const SwarmParams& params) {
  const double offset =
      params.r_sheep_sheep * std::sqrt(static_cast<double>(n_sheep)) * params.unit_distance;
  return com + offset * unit_vector(com - goal);
}

Vec2 collecting_point(const Vec2& com, const Vec2& furthest, const SwarmParams& params) {
  return furthest + params.r_sheep_sheep * params.unit_distance * unit_vector(furthest - com);
}

Vec2 baseline_subgoal(const FlockState& flock, const ArenaConfig& arena, const SwarmParams& params) {
  const Vec2 com = center_of_mass(flock);
  if (select_behavior(flock, params) == BehaviorKind::Driving)
    return driving_point(com, arena.goal, flock.size(), params);
  return collecting_point(com, flock.sheep[furthest_sheep(flock)].position, params);
}

ShepherdState step_shepherd_baseline(const ShepherdState& shep, const FlockState& flock,
                                     const ArenaConfig& arena, const SwarmParams& params) {
  const Vec2 target = baseline_subgoal(flock, arena, params);
  const Vec2 heading = unit_vector(target - shep.position);
  return {clamp_to_arena(shep.position + params.dt * (params.dog_speed * heading), arena)};
}

}  // namespace shepherd
