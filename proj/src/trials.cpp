#include "shepherd/harness/trials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "shepherd/ddpg/checkpoint.hpp"
#include "shepherd/errors.hpp"

namespace shepherd::harness {

void ExperimentSpec::validate() const {
  if (n_trials < 1) throw InvalidInput("experiment: n_trials must be >= 1");
  if (max_steps < 0) throw InvalidInput("experiment: max_steps must be >= 0");
  settings.validate();
}

MetricStats summarize(std::vector<double> values) {
  MetricStats s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    std::vector<double> sq;
    sq.reserve(values.size());
    for (double v : values) sq.push_back((v - s.mean) * (v - s.mean));
    std::sort(sq.begin(), sq.end());
    double ss = 0.0;
    for (double v : sq) ss += v;
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

TrialSummary summarize_trials(std::string scenario_id, std::uint64_t seed, int max_steps, double xi,
                              std::vector<TrialResult> trials) {
  TrialSummary out;
  out.scenario_id = std::move(scenario_id);
  out.seed = seed;
  out.max_steps = max_steps;
  out.xi = xi;
  out.n_trials = static_cast<int>(trials.size());
  auto column = [&](auto field) {
    std::vector<double> v;
    for (const auto& t : trials) v.push_back(static_cast<double>(t.*field));
    return summarize(std::move(v));
  };
  out.steps = column(&TrialResult::n_steps);
  out.travel = column(&TrialResult::travel_distance);
  out.error = column(&TrialResult::error_per_step);
  out.dog_subgoal = column(&TrialResult::dog_subgoal_per_step);
  out.cm_target = column(&TrialResult::cm_target_reduction_per_step);
  out.reward = column(&TrialResult::cumulative_reward);
  const auto successes = std::count_if(trials.begin(), trials.end(), [](const TrialResult& t) { return t.success; });
  out.success_rate = trials.empty() ? 0.0 : 100.0 * static_cast<double>(successes) / static_cast<double>(trials.size());
  out.trials = std::move(trials);
  return out;
}

std::vector<hddpg::MissionOutcome> run_mission_batch(const hddpg::Controller& controller,
                                                     const ArenaConfig& arena,
                                                     const Settings& settings, std::uint64_t seed,
                                                     int n_trials, int max_steps, Execution exec) {
  std::vector<hddpg::MissionOutcome> outcomes(static_cast<std::size_t>(std::max(n_trials, 0)));
  auto run_one = [&](int i) {
    Rng rng(seed + static_cast<std::uint64_t>(i));
    const hddpg::World world = make_mission_world(arena, settings, rng);
    outcomes[static_cast<std::size_t>(i)] = hddpg::run_controlled_mission(controller, world, max_steps);
  };
  if (exec == Execution::Serial) {
    for (int i = 0; i < n_trials; ++i) run_one(i);
    return outcomes;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n_trials; ++i) run_one(i);
  return outcomes;
}

TrialSummary run_trials(const ExperimentSpec& spec) {
  spec.validate();
  const Scenario& sc = find_scenario(spec.scenario_id);
  if (!sc.runnable)
    throw InvalidInput("scenario '" + sc.id + "' is reference-only and cannot be simulated");

  Settings settings = spec.settings;
  settings.swarm.dt = sc.dt;
  const ArenaConfig arena = settings.arena(sc.test.width, sc.test.height);
  const auto adapter = sc.adapter();

  std::vector<hddpg::MissionOutcome> outcomes;
  if (sc.method == Method::Strombom) {
    outcomes = run_mission_batch(hddpg::baseline_controller(), arena, settings, spec.seed,
                                 spec.n_trials, spec.max_steps, spec.execution);
  } else {
    const ddpg::DdpgAgent collect = ddpg::load_checkpoint(spec.collect_checkpoint);
    const ddpg::DdpgAgent drive = ddpg::load_checkpoint(spec.drive_checkpoint);
    outcomes = run_mission_batch(hddpg::learned_controller(collect, drive, adapter), arena, settings,
                                 spec.seed, spec.n_trials, spec.max_steps, spec.execution);
  }
  std::vector<TrialResult> results;
  results.reserve(outcomes.size());
  for (const auto& o : outcomes) results.push_back(o.result);
  return summarize_trials(sc.id, spec.seed, spec.max_steps, adapter ? adapter->xi : 1.0,
                          std::move(results));
}

namespace {

void stat_line(std::ostream& out, const char* name, const MetricStats& s) {
  out << std::left << std::setw(30) << name << std::right << std::setw(14) << s.mean
      << std::setw(14) << s.std << '\n';
}

}  // namespace

void write_report(std::ostream& out, const TrialSummary& s) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(6);
  out << "# shepherding trial report\n"
      << "scenario: " << s.scenario_id << '\n'
      << "trials: " << s.n_trials << '\n'
      << "seed: " << s.seed << " (trial i uses seed + i)\n"
      << "max_steps: " << s.max_steps << '\n'
      << "xi: " << s.xi << "\n\n";
  out << std::left << std::setw(30) << "metric" << std::right << std::setw(14) << "mean"
      << std::setw(14) << "std" << '\n';
  stat_line(out, "number_of_steps", s.steps);
  stat_line(out, "travel_distance_m", s.travel);
  stat_line(out, "error_per_step_m", s.error);
  stat_line(out, "dog_subgoal_per_step_m", s.dog_subgoal);
  stat_line(out, "cm_target_reduction_per_step_m", s.cm_target);
  stat_line(out, "cumulative_reward", s.reward);
  out << std::left << std::setw(30) << "success_rate_pct" << std::right << std::setw(14)
      << s.success_rate << "\n\n";

  if (auto it = std::find_if(all_scenarios().begin(), all_scenarios().end(),
                             [&](const Scenario& sc) { return sc.id == s.scenario_id; });
      it != all_scenarios().end()) {
    const auto& r = it->reference;
    out << std::setprecision(3) << "published: steps " << r.steps_mean << " +- " << r.steps_std
        << ", travel " << r.travel_mean << " +- " << r.travel_std << " m, success "
        << r.success_pct << " %\n\n"
        << std::setprecision(6);
  }

  out << "[trials]\n"
      << "trial,seed,success,n_steps,travel_distance,error_per_step,dog_subgoal_per_step,"
         "cm_target_reduction_per_step,cumulative_reward\n";
  for (std::size_t i = 0; i < s.trials.size(); ++i) {
    const auto& t = s.trials[i];
    out << i << ',' << s.seed + i << ',' << (t.success ? 1 : 0) << ',' << t.n_steps << ','
        << t.travel_distance << ',' << t.error_per_step << ',' << t.dog_subgoal_per_step << ','
        << t.cm_target_reduction_per_step << ',' << t.cumulative_reward << '\n';
  }
  out << "[/trials]\n";
  out.flags(flags);
  out.precision(precision);
}

void write_report(const std::string& path, const TrialSummary& summary) {
  std::ofstream out(path);
  if (!out) throw FileError(path, "cannot open report for writing");
  write_report(out, summary);
  if (!out) throw FileError(path, "write failed");
}

}  // namespace shepherd::harness
