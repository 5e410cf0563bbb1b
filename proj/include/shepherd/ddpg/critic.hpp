#pragma once

#include <array>
#include <vector>

#include "shepherd/ddpg/mlp.hpp"

namespace shepherd::ddpg {

/// Two-branch Q network: state and action are embedded separately, the
/// embeddings are concatenated and fed through a head ending in one
/// identity unit.
class Critic {
 public:
  struct Tape {
    Mlp::Tape state, action, head;
  };
  struct Gradients {
    ParamVector state, action, head;
  };

  Critic() = default;
  Critic(int state_dim, int action_dim, int branch_width, int head_width);

  int state_size() const { return state_branch_.input_size(); }
  int action_size() const { return action_branch_.input_size(); }

  void init_fan_in(Rng& rng);

  Batch forward(const Batch& states, const Batch& actions) const;
  Batch forward(const Batch& states, const Batch& actions, Tape& tape) const;

  /// Fills parameter gradients and returns dL/d(actions). When `state_grad`
  /// is non-null it receives dL/d(states).
  Batch backward(const Tape& tape, const Batch& upstream, Gradients& grads,
                 Batch* state_grad = nullptr) const;

  std::array<Mlp*, 3> parts() { return {&state_branch_, &action_branch_, &head_}; }
  std::array<const Mlp*, 3> parts() const { return {&state_branch_, &action_branch_, &head_}; }

  bool same_shape(const Critic& other) const;

 private:
  Mlp state_branch_;
  Mlp action_branch_;
  Mlp head_;
};

void soft_update(Critic& target, const Critic& source, double rate);

}  // namespace shepherd::ddpg
