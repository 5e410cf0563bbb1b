#include "shepherd/hddpg/skill_env.hpp"

#include <cmath>
#include <numbers>

#include "shepherd/errors.hpp"
#include "shepherd/hddpg/mission.hpp"
#include "shepherd/sheep_dynamics.hpp"
#include "shepherd/shepherd_baseline.hpp"

namespace shepherd::hddpg {

namespace {

constexpr int kMaxPlacementTries = 10000;

Vec2 point_in_disk(const Vec2& center, double radius, Rng& rng) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  const double a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return {center.x + r * std::cos(a), center.y + r * std::sin(a)};
}

double centre_coordinate(double extent, double radius, Rng& rng) {
  if (extent <= 2.0 * radius) return 0.5 * extent;
  return uniform(rng, radius, extent - radius);
}

Vec2 point_in_arena(const ArenaConfig& arena, Rng& rng) {
  return {uniform(rng, 0.0, arena.width), uniform(rng, 0.0, arena.height)};
}

}  // namespace

void EpisodeConfig::validate() const {
  arena.validate();
  params.validate();
  if (n_sheep < 1) throw InvalidInput("episode: n_sheep must be >= 1");
  if (!(reach_tolerance > 0.0)) throw InvalidInput("episode: reach_tolerance must be positive");
  if (max_steps < 1) throw InvalidInput("episode: max_steps must be >= 1");
}

FlockState initial_flock(SkillKind skill, const EpisodeConfig& cfg, Rng& rng) {
  const auto n = static_cast<std::size_t>(cfg.n_sheep);
  const double f = flock_threshold(n, cfg.params);
  const double radius = 0.5 * f;
  const std::size_t clustered = skill == SkillKind::Drive ? n : n - 1;

  for (int attempt = 0; attempt < kMaxPlacementTries; ++attempt) {
    const Vec2 centre{centre_coordinate(cfg.arena.width, radius, rng),
                      centre_coordinate(cfg.arena.height, radius, rng)};
    std::vector<Vec2> pos;
    pos.reserve(n);
    for (std::size_t i = 0; i < clustered; ++i)
      pos.push_back(clamp_to_arena(point_in_disk(centre, radius, rng), cfg.arena));
    if (clustered < n) {
      const Vec2 stray = point_in_arena(cfg.arena, rng);
      if (distance(stray, centre) < 2.0 * f) continue;
      pos.push_back(stray);
    }
    return make_flock(pos);
  }
  throw InvalidInput("initial_flock: arena too small for the collect layout");
}

SkillEnvironment::SkillEnvironment(EpisodeConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

std::vector<double> SkillEnvironment::observation() const {
  const auto o = observe(dog_, flock_, subgoal_).flatten();
  return {o.begin(), o.end()};
}

std::vector<double> SkillEnvironment::reset(Rng& rng) {
  flock_ = initial_flock(cfg_.skill, cfg_, rng);
  subgoal_ = reachable_subgoal(cfg_.skill, flock_, cfg_.arena, cfg_.params);
  for (int attempt = 0; attempt < kMaxPlacementTries; ++attempt) {
    dog_ = point_in_arena(cfg_.arena, rng);
    if (!reached(dog_, subgoal_, cfg_.reach_tolerance)) break;
  }
  return observation();
}

std::vector<double> SkillEnvironment::reset_to(const FlockState& flock, const Vec2& dog) {
  if (flock.size() != static_cast<std::size_t>(cfg_.n_sheep))
    throw InvalidInput("reset_to: flock size differs from the episode config");
  flock_ = flock;
  dog_ = clamp_to_arena(dog, cfg_.arena);
  subgoal_ = reachable_subgoal(cfg_.skill, flock_, cfg_.arena, cfg_.params);
  return observation();
}

ddpg::StepResult SkillEnvironment::step(std::span<const double> action) {
  if (action.size() != 2) throw InvalidInput("SkillEnvironment::step: action must be 2-D");
  const double d_before = distance(dog_, subgoal_);
  const Vec2 velocity{action[0], action[1]};
  dog_ = clamp_to_arena(dog_ + cfg_.params.dt * velocity, cfg_.arena);
  const Vec2 dogs[] = {dog_};
  flock_ = step_flock(flock_, dogs, cfg_.params, cfg_.arena);
  subgoal_ = reachable_subgoal(cfg_.skill, flock_, cfg_.arena, cfg_.params);

  ddpg::StepResult r;
  r.reward = step_reward(d_before, distance(dog_, subgoal_));
  r.terminal = reached(dog_, subgoal_, cfg_.reach_tolerance) ||
               (cfg_.skill == SkillKind::Collect &&
                behavior_gate(flock_, cfg_.params) == SkillKind::Drive) ||
               (cfg_.skill == SkillKind::Drive && mission_success(flock_, cfg_.arena, cfg_.params));
  r.next_state = observation();
  return r;
}

LearningCurve train_skill(SkillKind skill, const EpisodeConfig& cfg, ddpg::DdpgAgent& agent,
                          int episodes) {
  if (cfg.skill != skill) throw InvalidInput("train_skill: config is for a different skill");
  if (episodes < 0) throw InvalidInput("train_skill: negative episode count");
  SkillEnvironment env(cfg);
  LearningCurve curve;
  curve.reserve(static_cast<std::size_t>(episodes));
  for (int e = 0; e < episodes; ++e) {
    const ddpg::EpisodeTrace trace = ddpg::run_episode(agent, env, cfg.max_steps, true);
    curve.push_back({static_cast<int>(trace.steps.size()), trace.cumulative_reward,
                     trace.reward_per_action(), trace.reached_target});
  }
  return curve;
}

double tail_mean_reward(const LearningCurve& curve, std::size_t window) {
  if (curve.empty()) return 0.0;
  const std::size_t n = std::min(window, curve.size());
  double sum = 0.0;
  for (std::size_t i = curve.size() - n; i < curve.size(); ++i) sum += curve[i].reward_per_action;
  return sum / static_cast<double>(n);
}

}  // namespace shepherd::hddpg
