// Command-line front end: skill training, scenario evaluation, baseline
// batches and single traced missions.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "shepherd/ddpg/checkpoint.hpp"
#include "shepherd/errors.hpp"
#include "shepherd/harness/scenarios.hpp"
#include "shepherd/harness/trajectory.hpp"
#include "shepherd/harness/trials.hpp"
#include "shepherd/hddpg/mission.hpp"
#include "shepherd/hddpg/skill_env.hpp"

namespace {

using namespace shepherd;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hddpg::Extent parse_extent(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_w = 0, used_h = 0;
    const double w = std::stod(text.substr(0, x), &used_w);
    const double h = std::stod(text.substr(x + 1), &used_h);
    if (used_w != x || used_h != text.size() - x - 1 || !(w > 0.0) || !(h > 0.0))
      throw std::invalid_argument(text);
    return {w, h};
  } catch (const std::exception&) {
    throw UsageError("arena must look like WxH with positive extents, got '" + text + "'");
  }
}

std::string extent_tag(const hddpg::Extent& e) {
  std::ostringstream s;
  s << e.width << 'x' << e.height;
  return s.str();
}

void print_result(std::ostream& out, const harness::TrialResult& r) {
  out << std::fixed << std::setprecision(4) << "success: " << (r.success ? "yes" : "no") << '\n'
      << "steps: " << r.n_steps << '\n'
      << "travel_distance_m: " << r.travel_distance << '\n'
      << "error_per_step_m: " << r.error_per_step << '\n'
      << "dog_subgoal_per_step_m: " << r.dog_subgoal_per_step << '\n'
      << "cm_target_reduction_per_step_m: " << r.cm_target_reduction_per_step << '\n'
      << "cumulative_reward: " << r.cumulative_reward << '\n';
}

void write_curve(const std::string& path, const hddpg::LearningCurve& curve) {
  std::ofstream out(path);
  if (!out) throw FileError(path, "cannot open learning curve for writing");
  out << "episode,steps,cumulative_reward,reward_per_action,reached\n"
      << std::fixed << std::setprecision(6);
  for (std::size_t e = 0; e < curve.size(); ++e)
    out << e << ',' << curve[e].steps << ',' << curve[e].cumulative_reward << ','
        << curve[e].reward_per_action << ',' << (curve[e].reached ? 1 : 0) << '\n';
  if (!out) throw FileError(path, "write failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shepherding simulator and hierarchical DDPG trainer"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key = value parameter file")->check(CLI::ExistingFile);

  // train
  auto* train = app.add_subcommand("train", "train the collect or drive skill");
  std::string skill_name;
  std::string train_arena = "4x4";
  int episodes = 3000;
  std::uint64_t train_seed = 0;
  std::string train_out;
  std::string curve_path;
  int train_max_steps = 1000;
  train->add_option("skill", skill_name, "collect | drive")->required();
  train->add_option("--arena", train_arena, "arena extent WxH");
  train->add_option("--episodes", episodes, "training episodes")->check(CLI::NonNegativeNumber);
  train->add_option("--seed", train_seed, "generator seed");
  train->add_option("--out", train_out, "checkpoint path")->required();
  train->add_option("--curve", curve_path, "learning-curve CSV path");
  train->add_option("--max-steps", train_max_steps, "step limit per episode")->check(CLI::PositiveNumber);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "run a named scenario over seeded trials");
  std::string scenario_id;
  int eval_trials = 30;
  std::uint64_t eval_seed = 0;
  std::string report_path;
  std::string eval_collect, eval_drive;
  int eval_max_steps = 1000;
  bool serial = false;
  evaluate->add_option("--scenario", scenario_id, "scenario id (see `scenarios`)")->required();
  evaluate->add_option("--trials", eval_trials, "number of trials")->check(CLI::PositiveNumber);
  evaluate->add_option("--seed", eval_seed, "base seed; trial i uses seed + i");
  evaluate->add_option("--report", report_path, "report file");
  evaluate->add_option("--collect", eval_collect, "collect checkpoint (default collect_<train arena>.ckpt)");
  evaluate->add_option("--drive", eval_drive, "drive checkpoint (default drive_<train arena>.ckpt)");
  evaluate->add_option("--max-steps", eval_max_steps, "mission step limit")->check(CLI::NonNegativeNumber);
  evaluate->add_flag("--serial", serial, "run trials on one thread");

  // baseline
  auto* baseline = app.add_subcommand("baseline", "rule-based shepherd over seeded trials");
  std::string base_arena = "4x4";
  int base_trials = 30;
  std::uint64_t base_seed = 0;
  std::string base_report;
  int base_max_steps = 1000;
  baseline->add_option("--arena", base_arena, "arena extent WxH");
  baseline->add_option("--trials", base_trials, "number of trials")->check(CLI::PositiveNumber);
  baseline->add_option("--seed", base_seed, "base seed; trial i uses seed + i");
  baseline->add_option("--report", base_report, "report file");
  baseline->add_option("--max-steps", base_max_steps, "mission step limit")->check(CLI::NonNegativeNumber);

  // mission
  auto* mission = app.add_subcommand("mission", "one learned mission with a trajectory trace");
  std::string m_collect, m_drive, m_from, m_to, trace_path;
  std::string m_arena = "4x4";
  std::uint64_t m_seed = 0;
  int m_max_steps = 1000;
  mission->add_option("--collect", m_collect, "collect checkpoint")->required();
  mission->add_option("--drive", m_drive, "drive checkpoint")->required();
  mission->add_option("--arena", m_arena, "arena extent WxH when not rescaling");
  auto* from_opt = mission->add_option("--from", m_from, "training arena WxH");
  auto* to_opt = mission->add_option("--to", m_to, "mission arena WxH");
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  mission->add_option("--trace", trace_path, "trajectory CSV path")->required();
  mission->add_option("--seed", m_seed, "world seed");
  mission->add_option("--max-steps", m_max_steps, "mission step limit")->check(CLI::NonNegativeNumber);

  app.add_subcommand("scenarios", "list scenario ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    Settings settings;
    if (!config_path.empty()) settings = load_settings(config_path);

    if (*train) {
      const hddpg::SkillKind skill = [&] {
        try {
          return hddpg::parse_skill(skill_name);
        } catch (const InvalidInput& e) {
          throw UsageError(e.what());
        }
      }();
      const auto extent = parse_extent(train_arena);
      hddpg::EpisodeConfig cfg;
      cfg.skill = skill;
      cfg.arena = settings.arena(extent.width, extent.height);
      cfg.params = settings.swarm;
      cfg.n_sheep = settings.n_sheep;
      cfg.max_steps = train_max_steps;
      ddpg::DdpgAgent agent(ddpg::AgentConfig{}, train_seed);
      const auto curve = hddpg::train_skill(skill, cfg, agent, episodes);
      ddpg::save_checkpoint(agent, train_out);
      if (!curve_path.empty()) write_curve(curve_path, curve);
      std::cout << std::fixed << std::setprecision(4) << "trained " << hddpg::to_string(skill)
                << " for " << episodes << " episodes in " << extent_tag(extent) << '\n'
                << "final-100 reward per action: " << hddpg::tail_mean_reward(curve, 100) << '\n'
                << "checkpoint: " << train_out << '\n';
      return 0;
    }

    if (*evaluate) {
      const harness::Scenario& sc = [&]() -> const harness::Scenario& {
        try {
          return harness::find_scenario(scenario_id);
        } catch (const InvalidInput& e) {
          throw UsageError(e.what());
        }
      }();
      harness::ExperimentSpec spec;
      spec.scenario_id = sc.id;
      spec.n_trials = eval_trials;
      spec.seed = eval_seed;
      spec.max_steps = eval_max_steps;
      spec.settings = settings;
      spec.execution = serial ? harness::Execution::Serial : harness::Execution::Parallel;
      const std::string tag = extent_tag(sc.train);
      spec.collect_checkpoint = eval_collect.empty() ? "collect_" + tag + ".ckpt" : eval_collect;
      spec.drive_checkpoint = eval_drive.empty() ? "drive_" + tag + ".ckpt" : eval_drive;
      const auto summary = harness::run_trials(spec);
      harness::write_report(std::cout, summary);
      if (!report_path.empty()) harness::write_report(report_path, summary);
      return 0;
    }

    if (*baseline) {
      const auto extent = parse_extent(base_arena);
      const ArenaConfig arena = settings.arena(extent.width, extent.height);
      const auto outcomes =
          harness::run_mission_batch(hddpg::baseline_controller(), arena, settings, base_seed,
                                     base_trials, base_max_steps, harness::Execution::Parallel);
      std::vector<harness::TrialResult> results;
      for (const auto& o : outcomes) results.push_back(o.result);
      const auto summary = harness::summarize_trials("baseline-" + extent_tag(extent), base_seed,
                                                     base_max_steps, 1.0, std::move(results));
      harness::write_report(std::cout, summary);
      if (!base_report.empty()) harness::write_report(base_report, summary);
      return 0;
    }

    if (*mission) {
      const ddpg::DdpgAgent collect = ddpg::load_checkpoint(m_collect);
      const ddpg::DdpgAgent drive = ddpg::load_checkpoint(m_drive);
      std::optional<hddpg::ScaleAdapter> adapter;
      hddpg::Extent extent = parse_extent(m_arena);
      if (!m_from.empty()) {
        adapter = hddpg::ScaleAdapter::between(parse_extent(m_from), parse_extent(m_to));
        extent = adapter->big;
      }
      Rng rng(m_seed);
      const hddpg::World world =
          harness::make_mission_world(settings.arena(extent.width, extent.height), settings, rng);
      const auto outcome = hddpg::run_mission(collect, drive, world, adapter, m_max_steps);
      harness::export_trajectory(outcome.trace, trace_path);
      print_result(std::cout, outcome.result);
      return 0;
    }

    for (const auto& s : harness::all_scenarios())
      std::cout << std::left << std::setw(22) << s.id << s.description << '\n';
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
