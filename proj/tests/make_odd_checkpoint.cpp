// Writes an agent whose actor is not 4-in / 2-out.
#include <iostream>

#include "shepherd/ddpg/agent.hpp"
#include "shepherd/ddpg/checkpoint.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_odd_checkpoint PATH\n";
    return 2;
  }
  shepherd::ddpg::AgentConfig cfg;
  cfg.state_dim = 3;
  shepherd::ddpg::save_checkpoint(shepherd::ddpg::DdpgAgent(cfg, 1), argv[1]);
  return 0;
}
