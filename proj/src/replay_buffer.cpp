#include "shepherd/ddpg/replay_buffer.hpp"

#include "shepherd/errors.hpp"

namespace shepherd::ddpg {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw InvalidInput("ReplayBuffer: capacity must be positive");
}

void ReplayBuffer::push(Transition t) {
  if (storage_.size() < capacity_) {
    storage_.push_back(std::move(t));
    return;
  }
  storage_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= storage_.size()) throw InvalidInput("ReplayBuffer::at: index out of range");
  return storage_[(head_ + i) % storage_.size()];
}

std::vector<Transition> ReplayBuffer::sample(Rng& rng, std::size_t count) const {
  if (storage_.empty()) throw InvalidInput("ReplayBuffer::sample: buffer is empty");
  std::uniform_int_distribution<std::size_t> pick(0, storage_.size() - 1);
  std::vector<Transition> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(storage_[pick(rng)]);
  return out;
}

void ReplayBuffer::clear() {
  storage_.clear();
  head_ = 0;
}

}  // namespace shepherd::ddpg
