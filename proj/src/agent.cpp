#include "shepherd/ddpg/agent.hpp"

#include <algorithm>
#include <cmath>

#include "shepherd/errors.hpp"

namespace shepherd::ddpg {

namespace {

std::vector<int> actor_sizes(const AgentConfig& c) {
  std::vector<int> sizes{c.state_dim};
  sizes.insert(sizes.end(), c.actor_hidden.begin(), c.actor_hidden.end());
  sizes.push_back(c.action_dim);
  return sizes;
}

Batch gather(std::span<const Transition> batch, std::vector<double> Transition::*field, int dim) {
  Batch out(dim, static_cast<Eigen::Index>(batch.size()));
  for (std::size_t j = 0; j < batch.size(); ++j) {
    const auto& v = batch[j].*field;
    if (static_cast<int>(v.size()) != dim)
      throw InvalidInput("transition vector has wrong dimension");
    for (int i = 0; i < dim; ++i) out(i, static_cast<Eigen::Index>(j)) = v[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

double NoiseSchedule::sigma(std::int64_t episodes_done) const {
  return std::max(floor, sigma0 * std::pow(decay, static_cast<double>(episodes_done)));
}

void NoiseSchedule::validate() const {
  if (!(floor >= 0.0 && sigma0 >= floor)) throw InvalidInput("noise: need sigma0 >= floor >= 0");
  if (!(decay > 0.0 && decay <= 1.0)) throw InvalidInput("noise: decay must lie in (0, 1]");
}

void AgentConfig::validate() const {
  if (state_dim < 1 || action_dim < 1) throw InvalidInput("agent: dimensions must be positive");
  if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidInput("agent: gamma must lie in (0, 1)");
  if (!(tau_soft > 0.0 && tau_soft <= 1.0)) throw InvalidInput("agent: tau_soft must lie in (0, 1]");
  if (!(actor_lr > 0.0 && critic_lr > 0.0)) throw InvalidInput("agent: learning rates must be positive");
  if (minibatch < 1) throw InvalidInput("agent: minibatch must be >= 1");
  if (replay_capacity < 1) throw InvalidInput("agent: replay capacity must be >= 1");
  noise.validate();
}

DdpgAgent::DdpgAgent(const AgentConfig& config, std::uint64_t seed)
    : config_(config),
      seed_(seed),
      rng_(seed),
      replay_(config.replay_capacity) {
  config_.validate();
  actor_ = Mlp(actor_sizes(config_), Activation::Relu, Activation::Tanh);
  critic_ = Critic(config_.state_dim, config_.action_dim, config_.critic_branch, config_.critic_hidden);
  actor_.init_fan_in(rng_);
  critic_.init_fan_in(rng_);
  target_actor_ = actor_;
  target_critic_ = critic_;
  actor_opt_ = AdamState(actor_.num_parameters(), config_.actor_lr);
  auto parts = critic_.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    critic_opt_[i] = AdamState(parts[i]->num_parameters(), config_.critic_lr);
}

std::vector<double> DdpgAgent::policy(std::span<const double> state) const {
  if (static_cast<int>(state.size()) != config_.state_dim)
    throw InvalidInput("policy: state has wrong dimension");
  const Eigen::VectorXd a = actor_.forward(state);
  return {a.data(), a.data() + a.size()};
}

std::vector<double> DdpgAgent::act(std::span<const double> state, bool explore) {
  std::vector<double> a = policy(state);
  if (!explore) return a;
  const double sigma = noise_sigma();
  if (sigma <= 0.0) return a;
  std::normal_distribution<double> noise(0.0, sigma);
  for (double& v : a) v = std::clamp(v + noise(rng_), -1.0, 1.0);
  return a;
}

Eigen::VectorXd DdpgAgent::critic_target(std::span<const Transition> batch) const {
  if (batch.empty()) throw InvalidInput("critic_target: empty batch");
  const Batch next = gather(batch, &Transition::next_state, config_.state_dim);
  const Batch next_q = target_critic_.forward(next, target_actor_.forward(next));
  Eigen::VectorXd y(static_cast<Eigen::Index>(batch.size()));
  for (std::size_t j = 0; j < batch.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    y(col) = batch[j].terminal ? batch[j].reward : batch[j].reward + config_.gamma * next_q(0, col);
  }
  return y;
}

double DdpgAgent::critic_loss(std::span<const Transition> batch) const {
  const Eigen::VectorXd y = critic_target(batch);
  const Batch s = gather(batch, &Transition::state, config_.state_dim);
  const Batch a = gather(batch, &Transition::action, config_.action_dim);
  const Eigen::VectorXd q = critic_.forward(s, a).row(0).transpose();
  return (q - y).squaredNorm() / static_cast<double>(batch.size());
}

TrainDiagnostics DdpgAgent::train_step(std::span<const Transition> batch) {
  if (batch.empty()) throw InvalidInput("train_step: empty batch");
  const double inv_b = 1.0 / static_cast<double>(batch.size());
  const Batch s = gather(batch, &Transition::state, config_.state_dim);
  const Batch a = gather(batch, &Transition::action, config_.action_dim);
  const Eigen::VectorXd y = critic_target(batch);

  TrainDiagnostics diag;
  auto critic_parts = critic_.parts();

  // Critic: minimise mean (Q(s,a) - y)^2.
  {
    Critic::Tape tape;
    const Batch q = critic_.forward(s, a, tape);
    const Eigen::RowVectorXd diff = q.row(0) - y.transpose();
    diag.critic_loss = diff.squaredNorm() * inv_b;
    diag.mean_q = q.row(0).mean();
    const Batch upstream = (2.0 * inv_b) * diff;
    Critic::Gradients grads;
    critic_.backward(tape, upstream, grads);
    adam_step(critic_opt_[0], critic_parts[0]->parameters(), grads.state);
    adam_step(critic_opt_[1], critic_parts[1]->parameters(), grads.action);
    adam_step(critic_opt_[2], critic_parts[2]->parameters(), grads.head);
  }

  // Actor: ascend mean Q(s, mu(s)) through the freshly updated critic.
  {
    Mlp::Tape actor_tape;
    const Batch mu = actor_.forward(s, actor_tape);
    Critic::Tape critic_tape;
    critic_.forward(s, mu, critic_tape);
    const Batch upstream = Batch::Constant(1, mu.cols(), -inv_b);
    Critic::Gradients unused;
    const Batch d_action = critic_.backward(critic_tape, upstream, unused);
    ParamVector actor_grad;
    actor_.backward(actor_tape, d_action, actor_grad);
    adam_step(actor_opt_, actor_.parameters(), actor_grad);
  }

  soft_update(target_critic_, critic_, config_.tau_soft);
  soft_update(target_actor_, actor_, config_.tau_soft);
  return diag;
}

double EpisodeTrace::reward_per_action() const {
  return steps.empty() ? 0.0 : cumulative_reward / static_cast<double>(steps.size());
}

EpisodeTrace run_episode(DdpgAgent& agent, Environment& env, int max_steps, bool learn) {
  EpisodeTrace trace;
  if (max_steps <= 0) return trace;
  const auto m = static_cast<std::size_t>(agent.config().minibatch);

  std::vector<double> state = env.reset(agent.rng());
  for (int t = 0; t < max_steps; ++t) {
    std::vector<double> action = agent.act(state, learn);
    StepResult r = env.step(action);
    Transition tr{state, std::move(action), r.reward, r.next_state, r.terminal};
    trace.cumulative_reward += r.reward;
    if (learn) {
      agent.replay().push(tr);
      if (agent.replay().size() > m) {
        const auto batch = agent.replay().sample(agent.rng(), m);
        agent.train_step(batch);
      }
    }
    trace.steps.push_back(std::move(tr));
    state = std::move(r.next_state);
    if (r.terminal) {
      trace.reached_target = true;
      break;
    }
  }
  if (learn) agent.end_episode();
  return trace;
}

}  // namespace shepherd::ddpg
