#pragma once

#include <cstddef>

#include "shepherd/config.hpp"
#include "shepherd/world.hpp"

namespace shepherd {

enum class BehaviorKind { Driving, Collecting };

const char* to_string(BehaviorKind b);

/// Radius within which the flock counts as gathered: the configured
/// override when set, else r_sheep_sheep * N^(2/3).
double flock_threshold(std::size_t n_sheep, const SwarmParams& params);

/// Index of the sheep furthest from the flock centre; lowest index on ties
/// (distances within a relative 1e-12 count as tied).
std::size_t furthest_sheep(const FlockState& flock);

/// Collecting iff some sheep lies strictly beyond f(N) of the centre of mass.
BehaviorKind select_behavior(const FlockState& flock, const SwarmParams& params);

/// Point r_sheep_sheep * sqrt(N) * u behind the flock centre, on the far
/// side from the goal. Equals `com` when com coincides with the goal.
Vec2 driving_point(const Vec2& com, const Vec2& goal, std::size_t n_sheep,
                   const SwarmParams& params);

/// Point r_sheep_sheep * u beyond the furthest sheep, away from the centre.
Vec2 collecting_point(const Vec2& com, const Vec2& furthest, const SwarmParams& params);

/// Sub-goal the rule-based shepherd heads for in the current flock state.
Vec2 baseline_subgoal(const FlockState& flock, const ArenaConfig& arena, const SwarmParams& params);

/// One rule-based shepherd step: pick behaviour, head for its sub-goal at
/// dog_speed, clamp into the arena.
ShepherdState step_shepherd_baseline(const ShepherdState& shep, const FlockState& flock,
                                     const ArenaConfig& arena, const SwarmParams& params);

}  // namespace shepherd
