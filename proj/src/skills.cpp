#include "shepherd/hddpg/skills.hpp"

#include <algorithm>
#include <cmath>

#include "shepherd/errors.hpp"
#include "shepherd/shepherd_baseline.hpp"

namespace shepherd::hddpg {

const char* to_string(SkillKind s) { return s == SkillKind::Collect ? "collect" : "drive"; }

SkillKind parse_skill(const std::string& name) {
  if (name == "collect") return SkillKind::Collect;
  if (name == "drive") return SkillKind::Drive;
  throw InvalidInput("unknown skill '" + name + "' (expected collect or drive)");
}

double scale_factor(Extent small, Extent big) {
  for (double e : {small.width, small.height, big.width, big.height})
    if (!(std::isfinite(e) && e > 0.0)) throw InvalidInput("scale_factor: extents must be positive");
  return std::sqrt(small.width * small.width + small.height * small.height) /
         std::sqrt(big.width * big.width + big.height * big.height);
}

ScaleAdapter ScaleAdapter::between(Extent small, Extent big) {
  return {scale_factor(small, big), small, big};
}

Vec2 current_subgoal(SkillKind skill, const FlockState& flock, const Vec2& goal,
                     const SwarmParams& params) {
  const Vec2 com = center_of_mass(flock);
  if (skill == SkillKind::Collect)
    return collecting_point(com, flock.sheep[furthest_sheep(flock)].position, params);
  return driving_point(com, goal, flock.size(), params);
}

Vec2 reachable_subgoal(SkillKind skill, const FlockState& flock, const ArenaConfig& arena,
                       const SwarmParams& params) {
  return clamp_to_arena(current_subgoal(skill, flock, arena.goal, params), arena);
}

Observation observe(const Vec2& dog, const FlockState& flock, const Vec2& subgoal,
                    const std::optional<ScaleAdapter>& adapter) {
  Observation o{dog - center_of_mass(flock), dog - subgoal};
  if (adapter) {
    o.gcm_to_dog *= adapter->xi;
    o.subgoal_to_dog *= adapter->xi;
  }
  return o;
}

double step_reward(double d_before, double d_after) {
  return d_after - d_before <= 0.0 ? kStepReward : -kStepReward;
}

bool reached(const Vec2& dog, const Vec2& subgoal, double tolerance) {
  return distance(dog, subgoal) <= tolerance;
}

SkillKind behavior_gate(const FlockState& flock, const SwarmParams& params) {
  return select_behavior(flock, params) == BehaviorKind::Collecting ? SkillKind::Collect
                                                                    : SkillKind::Drive;
}

ScaledPolicy::ScaledPolicy(const ddpg::DdpgAgent& agent, double xi) : agent_(&agent), xi_(xi) {
  if (!(std::isfinite(xi) && xi > 0.0)) throw InvalidInput("ScaledPolicy: xi must be positive");
}

std::vector<double> ScaledPolicy::pre_clip(std::span<const double> state) const {
  std::vector<double> scaled(state.begin(), state.end());
  for (double& v : scaled) v *= xi_;
  std::vector<double> a = agent_->policy(scaled);
  for (double& v : a) v *= 1.0 / xi_;
  return a;
}

std::vector<double> ScaledPolicy::operator()(std::span<const double> state) const {
  std::vector<double> a = pre_clip(state);
  for (double& v : a) v = std::clamp(v, -1.0, 1.0);
  return a;
}

ScaledPolicy wrap_policy_with_scale(const ddpg::DdpgAgent& agent,
                                    const std::optional<ScaleAdapter>& adapter) {
  return ScaledPolicy(agent, adapter ? adapter->xi : 1.0);
}

}  // namespace shepherd::hddpg
