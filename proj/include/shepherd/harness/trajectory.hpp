#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shepherd/harness/metrics.hpp"

namespace shepherd::harness {

// Comma-separated, header row then one row per step, 6-decimal fixed:
//   step,time_s,dog_x,dog_y,sheep0_x,sheep0_y,...,cm_x,cm_y,
//   subgoal_x,subgoal_y,active_skill,reward

void export_trajectory(const MissionTrace& trace, std::ostream& out);
/// Throws FileError naming `path` on I/O failure.
void export_trajectory(const MissionTrace& trace, const std::string& path);

struct TrajectoryRow {
  int step = 0;
  double time_s = 0.0;
  Vec2 dog;
  std::vector<Vec2> sheep;
  Vec2 cm;
  Vec2 subgoal;
  std::string skill;
  double reward = 0.0;
};

/// Parses a file written by export_trajectory. Throws InvalidInput on a
/// malformed row.
std::vector<TrajectoryRow> read_trajectory(std::istream& in);

}  // namespace shepherd::harness
