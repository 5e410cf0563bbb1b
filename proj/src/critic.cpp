#include "shepherd/ddpg/critic.hpp"

#include "shepherd/errors.hpp"

namespace shepherd::ddpg {

Critic::Critic(int state_dim, int action_dim, int branch_width, int head_width)
    : state_branch_({state_dim, branch_width}, Activation::Relu, Activation::Relu),
      action_branch_({action_dim, branch_width}, Activation::Relu, Activation::Relu),
      head_({2 * branch_width, head_width, 1}, Activation::Relu, Activation::Identity) {}

void Critic::init_fan_in(Rng& rng) {
  state_branch_.init_fan_in(rng);
  action_branch_.init_fan_in(rng);
  head_.init_fan_in(rng);
}

Batch Critic::forward(const Batch& states, const Batch& actions) const {
  Tape tape;
  return forward(states, actions, tape);
}

Batch Critic::forward(const Batch& states, const Batch& actions, Tape& tape) const {
  if (states.cols() != actions.cols())
    throw InvalidInput("Critic::forward: state and action batch sizes differ");
  const Batch hs = state_branch_.forward(states, tape.state);
  const Batch ha = action_branch_.forward(actions, tape.action);
  Batch joined(hs.rows() + ha.rows(), hs.cols());
  joined << hs, ha;
  return head_.forward(joined, tape.head);
}

Batch Critic::backward(const Tape& tape, const Batch& upstream, Gradients& grads,
                       Batch* state_grad) const {
  const Batch d_joined = head_.backward(tape.head, upstream, grads.head);
  const Eigen::Index ws = state_branch_.output_size();
  const Eigen::Index wa = action_branch_.output_size();
  const Batch ds = state_branch_.backward(tape.state, d_joined.topRows(ws), grads.state);
  Batch da = action_branch_.backward(tape.action, d_joined.bottomRows(wa), grads.action);
  if (state_grad) *state_grad = ds;
  return da;
}

bool Critic::same_shape(const Critic& other) const {
  return state_branch_.same_shape(other.state_branch_) &&
         action_branch_.same_shape(other.action_branch_) && head_.same_shape(other.head_);
}

void soft_update(Critic& target, const Critic& source, double rate) {
  if (!target.same_shape(source)) throw DimensionError("soft_update: critic shapes differ");
  auto t = target.parts();
  auto s = source.parts();
  for (std::size_t i = 0; i < t.size(); ++i) soft_update(*t[i], *s[i], rate);
}

}  // namespace shepherd::ddpg
