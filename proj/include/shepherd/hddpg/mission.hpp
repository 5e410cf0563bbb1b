#pragma once

#include <functional>
#include <optional>

#include "shepherd/config.hpp"
#include "shepherd/ddpg/agent.hpp"
#include "shepherd/harness/metrics.hpp"
#include "shepherd/hddpg/skills.hpp"
#include "shepherd/world.hpp"

namespace shepherd::hddpg {

/// Full simulated world for a mission.
struct World {
  ArenaConfig arena;
  SwarmParams params;
  FlockState flock;
  ShepherdState dog;
};

/// Logged (never trained on) when the mission completes.
inline constexpr double kMissionBonus = 100.0;

/// Every sheep within goal_radius of the goal and within f(N) of the flock
/// centre of mass.
bool mission_success(const FlockState& flock, const ArenaConfig& arena, const SwarmParams& params);

/// What a shepherd controller decides for one step.
struct ControlDecision {
  Vec2 velocity;  // m/s
  Vec2 subgoal;
  std::string behavior;
};

using Controller = std::function<ControlDecision(const World&)>;

struct MissionOutcome {
  harness::TrialResult result;
  harness::MissionTrace trace;
};

/// Generic mission loop: controller decides, shepherd moves velocity*dt and
/// is clamped, then the flock reacts. Success is checked before the first
/// step and after every step; failure after `max_steps`.
MissionOutcome run_controlled_mission(const Controller& controller, World world, int max_steps);

/// Learned controller: the behaviour gate picks a skill, its sub-goal forms
/// the observation, and that skill's (optionally rescaled) actor emits the
/// velocity. Throws DimensionError when an agent is not 4-in / 2-out.
Controller learned_controller(const ddpg::DdpgAgent& collect_agent,
                              const ddpg::DdpgAgent& drive_agent,
                              const std::optional<ScaleAdapter>& adapter);

/// Rule-based shepherd, moving at dog_speed toward its sub-goal.
Controller baseline_controller();

MissionOutcome run_mission(const ddpg::DdpgAgent& collect_agent, const ddpg::DdpgAgent& drive_agent,
                           const World& world, const std::optional<ScaleAdapter>& adapter,
                           int max_steps);

MissionOutcome run_baseline_mission(const World& world, int max_steps);

}  // namespace shepherd::hddpg
