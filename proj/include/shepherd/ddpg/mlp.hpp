#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "shepherd/random.hpp"

namespace shepherd::ddpg {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Batch = Eigen::MatrixXd;  // one column per sample

/// Parameter-sized buffer with a fixed base alignment; vectorised kernels
/// take the same path for every allocation.
using ParamVector = std::vector<double, Eigen::aligned_allocator<double>>;

enum class Activation : int { Identity = 0, Tanh = 1, Relu = 2 };

/// Fully connected feed-forward network. All weights and biases live in one
/// contiguous buffer: for each layer, the row-major (out x in) weight matrix
/// followed by its bias vector.
class Mlp {
 public:
  /// Post-activation values of every layer, input first.
  struct Tape {
    std::vector<Batch> values;
  };

  Mlp() = default;
  Mlp(std::vector<int> layer_sizes, Activation hidden, Activation output);

  const std::vector<int>& layer_sizes() const { return sizes_; }
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }
  std::size_t num_layers() const { return sizes_.size() - 1; }
  Activation hidden_activation() const { return hidden_; }
  Activation output_activation() const { return output_; }

  std::span<double> parameters() { return params_; }
  std::span<const double> parameters() const { return params_; }
  std::size_t num_parameters() const { return params_.size(); }

  Eigen::Map<RowMatrix> weight(std::size_t layer);
  Eigen::Map<const RowMatrix> weight(std::size_t layer) const;
  Eigen::Map<Eigen::VectorXd> bias(std::size_t layer);
  Eigen::Map<const Eigen::VectorXd> bias(std::size_t layer) const;

  /// Uniform in +-1/sqrt(fan_in), weights and biases alike.
  void init_fan_in(Rng& rng);

  /// Throws InvalidInput when input rows != input_size().
  Batch forward(const Batch& input) const;
  Batch forward(const Batch& input, Tape& tape) const;
  Eigen::VectorXd forward(std::span<const double> input) const;

  /// Reverse pass for a tape from forward(). `upstream` is dL/d(output).
  /// Accumulates dL/d(params) summed over the batch into `param_grad`
  /// (resized and zeroed first) and returns dL/d(input).
  Batch backward(const Tape& tape, const Batch& upstream, ParamVector& param_grad) const;

  bool same_shape(const Mlp& other) const;

 private:
  std::size_t weight_offset(std::size_t layer) const { return offsets_[layer]; }
  std::size_t bias_offset(std::size_t layer) const {
    return offsets_[layer] + static_cast<std::size_t>(sizes_[layer + 1] * sizes_[layer]);
  }
  Activation activation_of(std::size_t layer) const {
    return layer + 1 == num_layers() ? output_ : hidden_;
  }

  std::vector<int> sizes_;
  Activation hidden_ = Activation::Relu;
  Activation output_ = Activation::Identity;
  std::vector<std::size_t> offsets_;
  ParamVector params_;
};

void apply_activation(Activation a, Batch& z);
/// Multiplies `grad` in place by the activation derivative, expressed in
/// terms of the activation's output `y`.
void apply_activation_derivative(Activation a, const Batch& y, Batch& grad);

/// target <- rate * source + (1 - rate) * target, parameter by parameter.
void soft_update(Mlp& target, const Mlp& source, double rate);

}  // namespace shepherd::ddpg
