#include "shepherd/ddpg/mlp.hpp"

#include <cmath>
#include <string>

#include "shepherd/errors.hpp"

namespace shepherd::ddpg {

Mlp::Mlp(std::vector<int> layer_sizes, Activation hidden, Activation output)
    : sizes_(std::move(layer_sizes)), hidden_(hidden), output_(output) {
  if (sizes_.size() < 2) throw InvalidInput("Mlp: need at least input and output sizes");
  for (int s : sizes_)
    if (s <= 0) throw InvalidInput("Mlp: layer sizes must be positive");
  std::size_t total = 0;
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    offsets_.push_back(total);
    total += static_cast<std::size_t>(sizes_[l + 1]) * static_cast<std::size_t>(sizes_[l] + 1);
  }
  params_.assign(total, 0.0);
}

Eigen::Map<RowMatrix> Mlp::weight(std::size_t layer) {
  return {params_.data() + weight_offset(layer), sizes_[layer + 1], sizes_[layer]};
}
Eigen::Map<const RowMatrix> Mlp::weight(std::size_t layer) const {
  return {params_.data() + weight_offset(layer), sizes_[layer + 1], sizes_[layer]};
}
Eigen::Map<Eigen::VectorXd> Mlp::bias(std::size_t layer) {
  return {params_.data() + bias_offset(layer), sizes_[layer + 1]};
}
Eigen::Map<const Eigen::VectorXd> Mlp::bias(std::size_t layer) const {
  return {params_.data() + bias_offset(layer), sizes_[layer + 1]};
}

void Mlp::init_fan_in(Rng& rng) {
  for (std::size_t l = 0; l < num_layers(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(sizes_[l]));
    std::uniform_real_distribution<double> dist(-bound, bound);
    auto w = weight(l);
    for (Eigen::Index r = 0; r < w.rows(); ++r)
      for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = dist(rng);
    auto b = bias(l);
    for (Eigen::Index r = 0; r < b.size(); ++r) b(r) = dist(rng);
  }
}

void apply_activation(Activation a, Batch& z) {
  switch (a) {
    case Activation::Identity:
      break;
    case Activation::Tanh:
      z = z.array().tanh();
      break;
    case Activation::Relu:
      z = z.array().max(0.0);
      break;
  }
}

void apply_activation_derivative(Activation a, const Batch& y, Batch& grad) {
  switch (a) {
    case Activation::Identity:
      break;
    case Activation::Tanh:
      grad.array() *= 1.0 - y.array().square();
      break;
    case Activation::Relu:
      grad.array() *= (y.array() > 0.0).cast<double>();
      break;
  }
}

Batch Mlp::forward(const Batch& input) const {
  Tape tape;
  return forward(input, tape);
}

Batch Mlp::forward(const Batch& input, Tape& tape) const {
  if (input.rows() != input_size())
    throw InvalidInput("Mlp::forward: expected input of size " + std::to_string(input_size()) +
                       ", got " + std::to_string(input.rows()));
  tape.values.clear();
  tape.values.reserve(num_layers() + 1);
  tape.values.push_back(input);
  for (std::size_t l = 0; l < num_layers(); ++l) {
    Batch z = weight(l) * tape.values.back();
    z.colwise() += bias(l);
    apply_activation(activation_of(l), z);
    tape.values.push_back(std::move(z));
  }
  return tape.values.back();
}

Eigen::VectorXd Mlp::forward(std::span<const double> input) const {
  const Eigen::Map<const Eigen::VectorXd> x(input.data(), static_cast<Eigen::Index>(input.size()));
  return forward(Batch(x)).col(0);
}

Batch Mlp::backward(const Tape& tape, const Batch& upstream,
                    ParamVector& param_grad) const {
  if (tape.values.size() != num_layers() + 1)
    throw InvalidInput("Mlp::backward: tape does not belong to this network");
  const Eigen::Index batch = tape.values.front().cols();
  if (upstream.rows() != output_size() || upstream.cols() != batch)
    throw InvalidInput("Mlp::backward: upstream gradient shape mismatch");

  param_grad.assign(params_.size(), 0.0);
  Batch grad = upstream;
  for (std::size_t l = num_layers(); l-- > 0;) {
    apply_activation_derivative(activation_of(l), tape.values[l + 1], grad);
    Eigen::Map<RowMatrix> dw(param_grad.data() + weight_offset(l), sizes_[l + 1], sizes_[l]);
    Eigen::Map<Eigen::VectorXd> db(param_grad.data() + bias_offset(l), sizes_[l + 1]);
    dw.noalias() = grad * tape.values[l].transpose();
    db = grad.rowwise().sum();
    grad = weight(l).transpose() * grad;
  }
  return grad;
}

bool Mlp::same_shape(const Mlp& other) const {
  return sizes_ == other.sizes_ && hidden_ == other.hidden_ && output_ == other.output_;
}

void soft_update(Mlp& target, const Mlp& source, double rate) {
  if (!target.same_shape(source)) throw DimensionError("soft_update: network shapes differ");
  auto t = target.parameters();
  auto s = source.parameters();
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = rate * s[i] + (1.0 - rate) * t[i];
}

}  // namespace shepherd::ddpg
