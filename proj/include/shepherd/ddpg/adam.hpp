#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shepherd/ddpg/mlp.hpp"

namespace shepherd::ddpg {

/// Bias-corrected Adam over one flat parameter buffer.
struct AdamState {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  ParamVector first_moment;
  ParamVector second_moment;
  std::int64_t step_count = 0;

  AdamState() = default;
  AdamState(std::size_t n_params, double lr) : learning_rate(lr), first_moment(n_params, 0.0), second_moment(n_params, 0.0) {}
};

/// One descent step: params -= lr * m_hat / (sqrt(v_hat) + eps).
/// Throws InvalidInput when the three buffers differ in length.
void adam_step(AdamState& opt, std::span<double> params, std::span<const double> gradients);

}  // namespace shepherd::ddpg
