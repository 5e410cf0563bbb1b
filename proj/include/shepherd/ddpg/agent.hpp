#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shepherd/ddpg/adam.hpp"
#include "shepherd/ddpg/critic.hpp"
#include "shepherd/ddpg/environment.hpp"
#include "shepherd/ddpg/mlp.hpp"
#include "shepherd/ddpg/replay_buffer.hpp"
#include "shepherd/random.hpp"

namespace shepherd::ddpg {

/// Gaussian exploration whose std-dev decays once per finished episode.
struct NoiseSchedule {
  double sigma0 = 0.2;
  double decay = 0.999;
  double floor = 0.01;

  double sigma(std::int64_t episodes_done) const;
  void validate() const;
};

struct AgentConfig {
  int state_dim = 4;
  int action_dim = 2;
  std::vector<int> actor_hidden{32, 64};
  int critic_branch = 32;
  int critic_hidden = 64;
  double gamma = 0.99;
  double tau_soft = 0.001;
  double actor_lr = 0.00025;
  double critic_lr = 0.001;
  int minibatch = 32;
  std::size_t replay_capacity = 100000;
  NoiseSchedule noise;

  void validate() const;
};

struct TrainDiagnostics {
  double critic_loss = 0.0;  // batch-mean squared TD error before the update
  double mean_q = 0.0;
};

/// Actor-critic learner with target networks, Adam optimisers, replay
/// memory and one generator for every random draw.
class DdpgAgent {
 public:
  DdpgAgent(const AgentConfig& config, std::uint64_t seed);

  const AgentConfig& config() const { return config_; }
  std::uint64_t seed() const { return seed_; }

  /// Deterministic policy output, each component in (-1, 1).
  std::vector<double> policy(std::span<const double> state) const;
  /// policy(), plus clipped Gaussian noise when `explore` is set.
  std::vector<double> act(std::span<const double> state, bool explore);

  /// y = r + gamma * Q'(s', mu'(s')), or y = r for terminal samples.
  Eigen::VectorXd critic_target(std::span<const Transition> batch) const;
  /// Mean squared error of the online critic against critic_target.
  double critic_loss(std::span<const Transition> batch) const;

  TrainDiagnostics train_step(std::span<const Transition> batch);

  double noise_sigma() const { return config_.noise.sigma(episodes_done_); }
  std::int64_t episodes_done() const { return episodes_done_; }
  void end_episode() { ++episodes_done_; }

  Rng& rng() { return rng_; }
  const Rng& rng() const { return rng_; }
  ReplayBuffer& replay() { return replay_; }
  const ReplayBuffer& replay() const { return replay_; }

  Mlp& actor() { return actor_; }
  const Mlp& actor() const { return actor_; }
  Critic& critic() { return critic_; }
  const Critic& critic() const { return critic_; }
  Mlp& target_actor() { return target_actor_; }
  const Mlp& target_actor() const { return target_actor_; }
  Critic& target_critic() { return target_critic_; }
  const Critic& target_critic() const { return target_critic_; }
  AdamState& actor_opt() { return actor_opt_; }
  const AdamState& actor_opt() const { return actor_opt_; }
  std::array<AdamState, 3>& critic_opt() { return critic_opt_; }
  const std::array<AdamState, 3>& critic_opt() const { return critic_opt_; }

  void set_episodes_done(std::int64_t n) { episodes_done_ = n; }

 private:
  AgentConfig config_;
  std::uint64_t seed_;
  Rng rng_;
  Mlp actor_;
  Critic critic_;
  Mlp target_actor_;
  Critic target_critic_;
  AdamState actor_opt_;
  std::array<AdamState, 3> critic_opt_;
  ReplayBuffer replay_;
  std::int64_t episodes_done_ = 0;
};

struct EpisodeTrace {
  std::vector<Transition> steps;
  double cumulative_reward = 0.0;
  bool reached_target = false;

  double reward_per_action() const;
};

/// One episode of the act / step / store / learn loop. Learning starts once
/// the replay memory holds more than `minibatch` transitions. Ends on a
/// terminal step or after `max_steps`; decays exploration noise afterwards.
EpisodeTrace run_episode(DdpgAgent& agent, Environment& env, int max_steps, bool learn = true);

}  // namespace shepherd::ddpg
