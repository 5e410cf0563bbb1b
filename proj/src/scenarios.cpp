#include "shepherd/harness/scenarios.hpp"

#include "shepherd/errors.hpp"

namespace shepherd::harness {

const char* to_string(Method m) {
  switch (m) {
    case Method::Strombom:
      return "strombom";
    case Method::Hddpg:
      return "h-ddpg";
    case Method::Dhrl:
      return "dhrl";
  }
  return "?";
}

std::optional<hddpg::ScaleAdapter> Scenario::adapter() const {
  if (!scaled) return std::nullopt;
  return hddpg::ScaleAdapter::between(train, test);
}

const std::vector<Scenario>& all_scenarios() {
  using M = Method;
  constexpr hddpg::Extent k4{4.0, 4.0};
  constexpr hddpg::Extent k6{6.0, 6.0};
  auto row = [](double sm, double ss, double tm, double ts, double sr) {
    ReferenceRow r;
    r.steps_mean = sm;
    r.steps_std = ss;
    r.travel_mean = tm;
    r.travel_std = ts;
    r.success_pct = sr;
    return r;
  };
  auto row5 = [&](double sm, double ss, double tm, double ts, double eps, double ds, double ct) {
    ReferenceRow r = row(sm, ss, tm, ts, 100.0);
    r.error_per_step = eps;
    r.dog_subgoal_per_step = ds;
    r.cm_target_per_step = ct;
    return r;
  };
  static const std::vector<Scenario> table = {
      {"Strombom-4x4", "rule-based shepherd in 4x4", M::Strombom, k4, k4, false, 0.1, true,
       row(135, 119, 11, 9.3, 96.67)},
      {"Strombom-6x6", "rule-based shepherd in 6x6", M::Strombom, k6, k6, false, 0.1, true,
       row(187, 21, 15.2, 1.8, 96.67)},
      {"DHRL-4x4", "discrete-action 4x4 model in 4x4 (reference only)", M::Dhrl, k4, k4, false, 0.1,
       false, row(107, 16, 8.3, 1.2, 100)},
      {"DHRL-6x6", "discrete-action 6x6 model in 6x6 (reference only)", M::Dhrl, k6, k6, false, 0.1,
       false, row(224, 32, 16.9, 2.4, 100)},
      {"DHRL-4x4to6x6", "discrete-action 4x4 model in 6x6, state scaled (reference only)", M::Dhrl,
       k4, k6, true, 0.1, false, row(206, 29, 15.9, 2.3, 100)},
      {"H-DDPG-4x4", "4x4-trained skills in 4x4", M::Hddpg, k4, k4, false, 0.1, true,
       row(100, 16, 9.7, 1.5, 100)},
      {"H-DDPG-6x6", "6x6-trained skills in 6x6", M::Hddpg, k6, k6, false, 0.1, true,
       row(188, 44, 19.9, 5.4, 100)},
      {"H-DDPG-4x4to6x6", "4x4-trained skills in 6x6 with scale adapter", M::Hddpg, k4, k6, true,
       0.1, true, row(205, 20, 16.7, 1.8, 100)},
      {"HDDPG-6x6-Sim", "6x6-trained skills in 6x6, 0.2 s step", M::Hddpg, k6, k6, false, 0.2, true,
       row5(505, 23, 17.4, 1.4, 0.026, 0.63, 0.006)},
      {"HDDPG-4x4to6x6-Sim", "4x4-trained skills in 6x6 with scale adapter, 0.2 s step", M::Hddpg,
       k4, k6, true, 0.2, true, row5(533, 55, 13.4, 0.9, 0.018, 0.72, 0.006)},
      {"HDDPG-6x6-Phy", "6x6-trained skills on hardware (reference only)", M::Hddpg, k6, k6, false,
       0.2, false, row5(911, 93, 27.6, 2.6, 0.05, 1.35, 0.003)},
      {"HDDPG-4x4to6x6-Phy", "4x4-trained skills on hardware with scale (reference only)",
       M::Hddpg, k4, k6, true, 0.2, false, row5(881, 88, 24.1, 1.7, 0.05, 1.29, 0.003)},
  };
  return table;
}

const Scenario& find_scenario(const std::string& id) {
  for (const auto& s : all_scenarios())
    if (s.id == id) return s;
  std::string known;
  for (const auto& s : all_scenarios()) known += (known.empty() ? "" : ", ") + s.id;
  throw InvalidInput("unknown scenario '" + id + "' (known: " + known + ")");
}

hddpg::World make_mission_world(const ArenaConfig& arena, const Settings& settings, Rng& rng) {
  hddpg::World w;
  w.arena = arena;
  w.params = settings.swarm;
  // Quarter of the arena furthest from the goal.
  const double x0 = arena.goal.x < 0.5 * arena.width ? 0.5 * arena.width : 0.0;
  const double y0 = arena.goal.y < 0.5 * arena.height ? 0.5 * arena.height : 0.0;
  std::vector<Vec2> pos;
  for (int i = 0; i < settings.n_sheep; ++i)
    pos.push_back({uniform(rng, x0, x0 + 0.5 * arena.width), uniform(rng, y0, y0 + 0.5 * arena.height)});
  w.flock = make_flock(pos);
  w.dog.position = {uniform(rng, 0.0, arena.width), uniform(rng, 0.0, arena.height)};
  return w;
}

}  // namespace shepherd::harness
