#pragma once

#include <vector>

#include "shepherd/config.hpp"
#include "shepherd/ddpg/agent.hpp"
#include "shepherd/ddpg/environment.hpp"
#include "shepherd/hddpg/skills.hpp"
#include "shepherd/world.hpp"

namespace shepherd::hddpg {

struct EpisodeConfig {
  SkillKind skill = SkillKind::Drive;
  ArenaConfig arena;
  SwarmParams params;
  int n_sheep = 3;
  double reach_tolerance = 0.1;
  int max_steps = 1000;

  void validate() const;
};

/// Seeded starting layouts for skill lessons.
///   Collect: N-1 sheep uniform in a disk of radius f(N)/2 around a uniform
///            centre, the last sheep at least 2 f(N) from that centre.
///   Drive:   all N sheep in such a disk.
/// The disk centre keeps the whole disk inside the arena.
FlockState initial_flock(SkillKind skill, const EpisodeConfig& cfg, Rng& rng);

/// One lesson: the shepherd is rewarded for closing on the skill's sub-goal
/// while the sheep react to it. The episode ends when the sub-goal is reached
/// or the lesson hands off: Collect once the flock is gathered, Drive once
/// mission_success holds.
class SkillEnvironment final : public ddpg::Environment {
 public:
  explicit SkillEnvironment(EpisodeConfig cfg);

  std::vector<double> reset(Rng& rng) override;
  ddpg::StepResult step(std::span<const double> action) override;

  const EpisodeConfig& config() const { return cfg_; }
  const FlockState& flock() const { return flock_; }
  const Vec2& dog() const { return dog_; }
  const Vec2& subgoal() const { return subgoal_; }

  /// Places the world explicitly (bypasses the seeded layout).
  std::vector<double> reset_to(const FlockState& flock, const Vec2& dog);

 private:
  std::vector<double> observation() const;

  EpisodeConfig cfg_;
  FlockState flock_;
  Vec2 dog_;
  Vec2 subgoal_;
};

struct EpisodeStats {
  int steps = 0;
  double cumulative_reward = 0.0;
  double reward_per_action = 0.0;
  bool reached = false;
};

using LearningCurve = std::vector<EpisodeStats>;

/// Runs `episodes` learning episodes of `skill` on `agent`.
/// Throws InvalidInput when cfg.skill != skill or cfg is invalid.
LearningCurve train_skill(SkillKind skill, const EpisodeConfig& cfg, ddpg::DdpgAgent& agent,
                          int episodes);

/// Mean reward-per-action over the last `window` episodes (all, if fewer).
double tail_mean_reward(const LearningCurve& curve, std::size_t window);

}  // namespace shepherd::hddpg
