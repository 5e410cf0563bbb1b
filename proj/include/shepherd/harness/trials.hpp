#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shepherd/config.hpp"
#include "shepherd/hddpg/mission.hpp"
#include "shepherd/harness/metrics.hpp"
#include "shepherd/harness/scenarios.hpp"

namespace shepherd::harness {

enum class Execution { Serial, Parallel };

struct ExperimentSpec {
  std::string scenario_id;
  int n_trials = 30;
  std::uint64_t seed = 0;
  std::string collect_checkpoint;  // learned scenarios only
  std::string drive_checkpoint;
  int max_steps = 1000;
  Settings settings;
  Execution execution = Execution::Parallel;

  void validate() const;
};

struct MetricStats {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1)
};

/// Order-independent mean and sample std (values are summed in sorted order).
MetricStats summarize(std::vector<double> values);

struct TrialSummary {
  std::string scenario_id;
  int n_trials = 0;
  std::uint64_t seed = 0;
  int max_steps = 0;
  double xi = 1.0;
  std::vector<TrialResult> trials;
  MetricStats steps, travel, error, dog_subgoal, cm_target, reward;
  double success_rate = 0.0;  // percent
};

TrialSummary summarize_trials(std::string scenario_id, std::uint64_t seed, int max_steps, double xi,
                              std::vector<TrialResult> trials);

/// Trial i runs on make_mission_world(seeded with seed + i). Independent
/// missions run across OpenMP threads under Execution::Parallel; the
/// outcome vector is identical to the serial loop's.
std::vector<hddpg::MissionOutcome> run_mission_batch(const hddpg::Controller& controller,
                                                     const ArenaConfig& arena,
                                                     const Settings& settings, std::uint64_t seed,
                                                     int n_trials, int max_steps, Execution exec);

/// Loads checkpoints as needed (FileError naming a missing path), builds
/// the scenario's controller and runs the batch. Reference-only scenarios
/// raise InvalidInput.
TrialSummary run_trials(const ExperimentSpec& spec);

/// Human-readable table followed by a delimited per-trial block.
void write_report(std::ostream& out, const TrialSummary& summary);
void write_report(const std::string& path, const TrialSummary& summary);

}  // namespace shepherd::harness
