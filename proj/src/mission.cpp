#include "shepherd/hddpg/mission.hpp"

#include "shepherd/errors.hpp"
#include "shepherd/sheep_dynamics.hpp"
#include "shepherd/shepherd_baseline.hpp"

namespace shepherd::hddpg {

namespace {

void require_policy_shape(const ddpg::DdpgAgent& agent, const char* name) {
  const auto& c = agent.config();
  if (c.state_dim != 4 || c.action_dim != 2)
    throw DimensionError(std::string(name) + " agent maps " + std::to_string(c.state_dim) +
                         " inputs to " + std::to_string(c.action_dim) +
                         " outputs; missions need 4 -> 2");
}

Vec2 subgoal_for(const std::string& behavior, const World& w) {
  const SkillKind skill = behavior == to_string(SkillKind::Collect) ? SkillKind::Collect
                                                                    : SkillKind::Drive;
  return reachable_subgoal(skill, w.flock, w.arena, w.params);
}

}  // namespace

bool mission_success(const FlockState& flock, const ArenaConfig& arena, const SwarmParams& params) {
  const Vec2 com = center_of_mass(flock);
  const double limit = flock_threshold(flock.size(), params);
  for (const auto& s : flock.sheep) {
    if (distance(s.position, arena.goal) > arena.goal_radius) return false;
    if (distance(s.position, com) > limit) return false;
  }
  return true;
}

MissionOutcome run_controlled_mission(const Controller& controller, World world, int max_steps) {
  MissionOutcome out;
  auto& trace = out.trace;
  trace.dt = world.params.dt;
  trace.n_sheep = static_cast<int>(world.flock.size());
  trace.goal = world.arena.goal;
  trace.initial_dog = world.dog.position;
  trace.initial_cm = center_of_mass(world.flock);

  bool done = mission_success(world.flock, world.arena, world.params);
  for (int t = 1; t <= max_steps && !done; ++t) {
    const ControlDecision d = controller(world);
    harness::StepRecord rec;
    rec.step = t;
    rec.dog_before = world.dog.position;
    rec.velocity = d.velocity;
    rec.subgoal = d.subgoal;
    rec.skill = d.behavior;

    world.dog.position = clamp_to_arena(world.dog.position + world.params.dt * d.velocity, world.arena);
    const Vec2 dogs[] = {world.dog.position};
    world.flock = step_flock(world.flock, dogs, world.params, world.arena);

    const Vec2 next_subgoal = subgoal_for(d.behavior, world);
    rec.reward = step_reward(distance(rec.dog_before, d.subgoal),
                             distance(world.dog.position, next_subgoal));
    done = mission_success(world.flock, world.arena, world.params);
    if (done) rec.reward += kMissionBonus;

    rec.dog = world.dog.position;
    rec.sheep = world.flock.positions();
    rec.cm = center_of_mass(world.flock);
    trace.steps.push_back(std::move(rec));
  }

  if (!trace.steps.empty()) out.result = harness::compute_metrics(trace);
  out.result.success = done;
  return out;
}

Controller learned_controller(const ddpg::DdpgAgent& collect_agent,
                              const ddpg::DdpgAgent& drive_agent,
                              const std::optional<ScaleAdapter>& adapter) {
  require_policy_shape(collect_agent, "collect");
  require_policy_shape(drive_agent, "drive");
  ScaledPolicy collect = wrap_policy_with_scale(collect_agent, adapter);
  ScaledPolicy drive = wrap_policy_with_scale(drive_agent, adapter);
  return [collect, drive](const World& w) {
    const SkillKind skill = behavior_gate(w.flock, w.params);
    const Vec2 subgoal = reachable_subgoal(skill, w.flock, w.arena, w.params);
    const auto state = observe(w.dog.position, w.flock, subgoal).flatten();
    const auto a = skill == SkillKind::Collect ? collect(state) : drive(state);
    return ControlDecision{{a[0], a[1]}, subgoal, to_string(skill)};
  };
}

Controller baseline_controller() {
  return [](const World& w) {
    const bool driving = select_behavior(w.flock, w.params) == BehaviorKind::Driving;
    const Vec2 subgoal = baseline_subgoal(w.flock, w.arena, w.params);
    const Vec2 v = w.params.dog_speed * unit_vector(subgoal - w.dog.position);
    return ControlDecision{v, subgoal, to_string(driving ? SkillKind::Drive : SkillKind::Collect)};
  };
}

MissionOutcome run_mission(const ddpg::DdpgAgent& collect_agent, const ddpg::DdpgAgent& drive_agent,
                           const World& world, const std::optional<ScaleAdapter>& adapter,
                           int max_steps) {
  return run_controlled_mission(learned_controller(collect_agent, drive_agent, adapter), world,
                                max_steps);
}

MissionOutcome run_baseline_mission(const World& world, int max_steps) {
  return run_controlled_mission(baseline_controller(), world, max_steps);
}

}  // namespace shepherd::hddpg
