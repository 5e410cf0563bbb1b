#include "shepherd/ddpg/adam.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "shepherd/errors.hpp"

namespace shepherd::ddpg {

void adam_step(AdamState& opt, std::span<double> params, std::span<const double> gradients) {
  if (params.size() != gradients.size() || params.size() != opt.first_moment.size() ||
      params.size() != opt.second_moment.size())
    throw InvalidInput("adam_step: parameter, gradient and moment sizes differ");

  const auto n = static_cast<Eigen::Index>(params.size());
  Eigen::Map<Eigen::ArrayXd> p(params.data(), n);
  Eigen::Map<const Eigen::ArrayXd> g(gradients.data(), n);
  Eigen::Map<Eigen::ArrayXd> m(opt.first_moment.data(), n);
  Eigen::Map<Eigen::ArrayXd> v(opt.second_moment.data(), n);

  ++opt.step_count;
  const double t = static_cast<double>(opt.step_count);
  const double correction1 = 1.0 - std::pow(opt.beta1, t);
  const double correction2 = 1.0 - std::pow(opt.beta2, t);
  m = opt.beta1 * m + (1.0 - opt.beta1) * g;
  v = opt.beta2 * v + (1.0 - opt.beta2) * g.square();
  p -= (opt.learning_rate / correction1) * m / ((v * (1.0 / correction2)).sqrt() + opt.epsilon);
}

}  // namespace shepherd::ddpg
