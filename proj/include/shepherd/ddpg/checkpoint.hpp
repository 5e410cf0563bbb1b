#pragma once

#include <iosfwd>
#include <string>

#include "shepherd/ddpg/agent.hpp"

namespace shepherd::ddpg {

// Checkpoint layout (all integers and doubles little-endian, doubles IEEE-754):
//
//   char[8]  magic "SHEPDDPG"
//   u32      format version (kCheckpointVersion)
//   config   i32 state_dim, i32 action_dim, u32 n_hidden, i32 hidden[n_hidden],
//            i32 critic_branch, i32 critic_hidden, f64 gamma, f64 tau_soft,
//            f64 actor_lr, f64 critic_lr, i32 minibatch, u64 replay_capacity,
//            f64 sigma0, f64 decay, f64 floor
//   u64      generator seed, i64 episodes done
//   networks actor, critic (state branch, action branch, head), target actor,
//            target critic. Each network: u32 n_sizes, i32 layer_sizes[n_sizes],
//            u8 hidden activation, u8 output activation, u64 n_params, then for
//            each layer the row-major weight matrix followed by the bias.
//   adam     actor, then the three critic parts: f64 lr, beta1, beta2, epsilon,
//            i64 step_count, u64 n, f64 first[n], f64 second[n]
//   u64      length of the generator state text, then that text
//
// Replay memory is not stored.

inline constexpr std::uint32_t kCheckpointVersion = 1;

void save_checkpoint(const DdpgAgent& agent, std::ostream& out);
void save_checkpoint(const DdpgAgent& agent, const std::string& path);

/// Throws DimensionError on a malformed or inconsistent stream and FileError
/// (naming the path) when the file cannot be read.
DdpgAgent load_checkpoint(std::istream& in);
DdpgAgent load_checkpoint(const std::string& path);

}  // namespace shepherd::ddpg
