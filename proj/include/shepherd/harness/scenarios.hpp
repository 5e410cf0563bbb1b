#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shepherd/config.hpp"
#include "shepherd/hddpg/mission.hpp"
#include "shepherd/hddpg/skills.hpp"
#include "shepherd/random.hpp"

namespace shepherd::harness {

enum class Method { Strombom, Hddpg, Dhrl };

const char* to_string(Method m);

/// Published mean +- std (and success %) for a scenario, for side-by-side
/// reporting. Absent fields are not reported.
struct ReferenceRow {
  double steps_mean = 0.0, steps_std = 0.0;
  double travel_mean = 0.0, travel_std = 0.0;
  double success_pct = 0.0;
  std::optional<double> error_per_step;
  std::optional<double> dog_subgoal_per_step;
  std::optional<double> cm_target_per_step;
};

struct Scenario {
  std::string id;
  std::string description;
  Method method = Method::Strombom;
  hddpg::Extent train;  // arena the policies were trained in
  hddpg::Extent test;   // arena the missions run in
  bool scaled = false;  // apply the train->test scale adapter
  double dt = 0.1;
  /// Reference-only rows: discrete-action or physical-hardware results that
  /// this simulator does not execute.
  bool runnable = true;
  ReferenceRow reference;

  std::optional<hddpg::ScaleAdapter> adapter() const;
};

const std::vector<Scenario>& all_scenarios();

/// Throws InvalidInput listing the known ids when `id` is unknown.
const Scenario& find_scenario(const std::string& id);

/// Seeded mission start: every sheep uniform in the quarter of the arena
/// diagonally opposite the goal corner, shepherd uniform over the arena.
hddpg::World make_mission_world(const ArenaConfig& arena, const Settings& settings, Rng& rng);

}  // namespace shepherd::harness
