#pragma once

#include <cstddef>
#include <vector>

#include "shepherd/random.hpp"

namespace shepherd::ddpg {

struct Transition {
  std::vector<double> state;
  std::vector<double> action;
  double reward = 0.0;
  std::vector<double> next_state;
  bool terminal = false;
};

/// Fixed-capacity FIFO ring; the oldest transition is evicted when full.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return storage_.size(); }
  bool empty() const { return storage_.empty(); }

  void push(Transition t);

  /// Age order: 0 is the oldest stored transition.
  const Transition& at(std::size_t i) const;

  /// `count` transitions drawn uniformly with replacement.
  std::vector<Transition> sample(Rng& rng, std::size_t count) const;

  void clear();

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // slot the next push overwrites once full
  std::vector<Transition> storage_;
};

}  // namespace shepherd::ddpg
