#include <doctest.h>

#include <cmath>
#include <vector>

#include "shepherd/ddpg/agent.hpp"
#include "shepherd/errors.hpp"
#include "shepherd/hddpg/mission.hpp"
#include "shepherd/hddpg/skill_env.hpp"
#include "shepherd/hddpg/skills.hpp"
#include "shepherd/shepherd_baseline.hpp"

using namespace shepherd;
using namespace shepherd::hddpg;

namespace {

bool near(const Vec2& a, const Vec2& b, double tol = 1e-4) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

EpisodeConfig lesson(SkillKind skill) {
  EpisodeConfig cfg;
  cfg.skill = skill;
  cfg.arena = Settings{}.arena(4, 4);
  return cfg;
}

// Actor whose output layer is zeroed and biased to a fixed action.
ddpg::DdpgAgent constant_agent(double ax, double ay) {
  ddpg::DdpgAgent agent(ddpg::AgentConfig{}, 1);
  auto& actor = agent.actor();
  const std::size_t last = actor.num_layers() - 1;
  actor.weight(last).setZero();
  actor.bias(last)(0) = std::atanh(ax);
  actor.bias(last)(1) = std::atanh(ay);
  return agent;
}

}  // namespace

TEST_CASE("current_subgoal") {
  SwarmParams p;
  const std::vector<Vec2> stray{{-0.1, 0}, {0.1, 0}, {2, 0}};
  const FlockState f = make_flock(stray);
  const Vec2 com = center_of_mass(f);
  CHECK(current_subgoal(SkillKind::Collect, f, {0, 0}, p) == collecting_point(com, {2, 0}, p));

  const std::vector<Vec2> at2{{2, 0.1}, {2, -0.1}, {2, 0}};
  CHECK(near(current_subgoal(SkillKind::Drive, make_flock(at2), {0, 0}, p), {3.7321, 0}));
  const std::vector<Vec2> on_goal{{1, 1}};
  CHECK(current_subgoal(SkillKind::Drive, make_flock(on_goal), {1, 1}, p) == Vec2{1, 1});
}

TEST_CASE("reachable_subgoal stays inside the arena") {
  const ArenaConfig arena = Settings{}.arena(4, 4);
  SwarmParams p;
  const std::vector<Vec2> corner{{3.8, 3.8}, {3.9, 3.7}, {3.7, 3.9}};
  const FlockState f = make_flock(corner);
  const Vec2 raw = current_subgoal(SkillKind::Drive, f, arena.goal, p);
  CHECK_FALSE(inside_arena(raw, arena));
  CHECK(reachable_subgoal(SkillKind::Drive, f, arena, p) == clamp_to_arena(raw, arena));
}

TEST_CASE("observe") {
  const std::vector<Vec2> origin{{0, 0}};
  const FlockState f = make_flock(origin);
  const Observation o = observe({1, 1}, f, {1, 0});
  CHECK(o.gcm_to_dog == Vec2{1, 1});
  CHECK(o.subgoal_to_dog == Vec2{0, 1});
  CHECK(o.flatten() == std::array<double, 4>{1, 1, 0, 1});

  const Observation zero = observe({0, 0}, f, {0, 0});
  CHECK(zero.flatten() == std::array<double, 4>{0, 0, 0, 0});

  const ScaleAdapter ad{2.0 / 3.0, {4, 4}, {6, 6}};
  const Observation s = observe({1, 1}, f, {1, 0}, ad);
  CHECK(near(s.gcm_to_dog, {0.667, 0.667}, 1e-3));
  CHECK(near(s.subgoal_to_dog, {0, 0.667}, 1e-3));
}

TEST_CASE("step_reward") {
  CHECK(step_reward(1.0, 0.9) == 0.1);
  CHECK(step_reward(1.0, 1.0) == 0.1);
  CHECK(step_reward(0.9, 1.0) == -0.1);
  CHECK(step_reward(0.0, 0.0) == 0.1);
}

TEST_CASE("reached") {
  CHECK(reached({0, 0}, {0.05, 0}, 0.1));
  CHECK_FALSE(reached({0, 0}, {1, 0}, 0.1));
  CHECK(reached({0, 0}, {0.1, 0}, 0.1));
}

TEST_CASE("behavior_gate mirrors select_behavior") {
  SwarmParams p;
  const std::vector<Vec2> gathered{{0, 0}, {0.5, 0}, {1, 0}};
  CHECK(behavior_gate(make_flock(gathered), p) == SkillKind::Drive);
  const std::vector<Vec2> scattered{{0, 0}, {0, 0.1}, {3, 0}};
  CHECK(behavior_gate(make_flock(scattered), p) == SkillKind::Collect);
  const std::vector<Vec2> single{{2, 2}};
  CHECK(behavior_gate(make_flock(single), p) == SkillKind::Drive);

  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    std::vector<Vec2> s(1 + i % 5);
    for (auto& v : s) v = {uniform(rng, 0, 4), uniform(rng, 0, 4)};
    const FlockState f = make_flock(s);
    CHECK((behavior_gate(f, p) == SkillKind::Drive) ==
          (select_behavior(f, p) == BehaviorKind::Driving));
  }
}

TEST_CASE("scale_factor") {
  CHECK(scale_factor({4, 4}, {6, 6}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(scale_factor({6, 6}, {6, 6}) == 1.0);
  CHECK(scale_factor({2, 2}, {4, 4}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(scale_factor({0, 4}, {6, 6}), InvalidInput);
  CHECK_THROWS_AS(scale_factor({4, 4}, {6, -1}), InvalidInput);
  const ScaleAdapter a = ScaleAdapter::between({4, 4}, {6, 6});
  CHECK(std::abs(a.xi - 0.6667) < 1e-4);
}

TEST_CASE("scaled policy") {
  SUBCASE("xi 1 is the bare actor") {
    ddpg::DdpgAgent agent(ddpg::AgentConfig{}, 9);
    const ScaledPolicy bare = wrap_policy_with_scale(agent, std::nullopt);
    const ScaledPolicy unit = wrap_policy_with_scale(agent, ScaleAdapter{1.0, {4, 4}, {4, 4}});
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
      const std::vector<double> s{uniform(rng, -4, 4), uniform(rng, -4, 4), uniform(rng, -4, 4),
                                  uniform(rng, -4, 4)};
      CHECK(bare(s) == agent.policy(s));
      CHECK(unit(s) == agent.policy(s));
    }
  }
  SUBCASE("pre-clip output is actor(xi s) / xi") {
    ddpg::DdpgAgent agent(ddpg::AgentConfig{}, 10);
    const double xi = 2.0 / 3.0;
    const ScaledPolicy pol(agent, xi);
    Rng rng(10);
    for (int i = 0; i < 200; ++i) {
      std::vector<double> s{uniform(rng, -6, 6), uniform(rng, -6, 6), uniform(rng, -6, 6),
                            uniform(rng, -6, 6)};
      std::vector<double> scaled = s;
      for (double& v : scaled) v *= xi;
      const auto a = agent.policy(scaled);
      const auto pre = pol.pre_clip(s);
      CHECK(pre[0] == doctest::Approx(a[0] / xi).epsilon(1e-12));
      CHECK(pre[1] == doctest::Approx(a[1] / xi).epsilon(1e-12));
      const auto out = pol(s);
      CHECK(out[0] == std::clamp(pre[0], -1.0, 1.0));
      CHECK(out[1] == std::clamp(pre[1], -1.0, 1.0));
    }
  }
  SUBCASE("clipping after rescaling") {
    const std::vector<double> s{0, 0, 0, 0};
    const auto big = constant_agent(0.9, 0.0);
    const auto a = ScaledPolicy(big, 2.0 / 3.0)(s);
    CHECK(a[0] == 1.0);
    CHECK(std::abs(a[1]) < 1e-12);
    const auto small = constant_agent(0.3, -0.3);
    const auto b = ScaledPolicy(small, 2.0 / 3.0)(s);
    CHECK(b[0] == doctest::Approx(0.45));
    CHECK(b[1] == doctest::Approx(-0.45));
  }
}

TEST_CASE("initial_flock layouts") {
  Rng rng(5);
  const SwarmParams p;
  const double f = flock_threshold(3, p);
  for (int i = 0; i < 200; ++i) {
    const FlockState drive = initial_flock(SkillKind::Drive, lesson(SkillKind::Drive), rng);
    CHECK(drive.size() == 3);
    CHECK(behavior_gate(drive, p) == SkillKind::Drive);

    const FlockState collect = initial_flock(SkillKind::Collect, lesson(SkillKind::Collect), rng);
    const std::vector<Vec2> cluster{collect.sheep[0].position, collect.sheep[1].position};
    const Vec2 c = center_of_mass(cluster);
    CHECK(distance(collect.sheep[0].position, collect.sheep[1].position) <= f + 1e-12);
    CHECK(distance(collect.sheep[2].position, c) >= f);
    for (const auto& s : collect.sheep) CHECK(inside_arena(s.position, lesson(SkillKind::Collect).arena));
  }
}

TEST_CASE("skill environment step") {
  SkillEnvironment env(lesson(SkillKind::Drive));
  const std::vector<Vec2> s{{3, 3}, {3.2, 3}, {3, 3.2}};
  const auto obs = env.reset_to(make_flock(s), {0.5, 3.5});
  REQUIRE(obs.size() == 4);
  CHECK(obs[2] == env.dog().x - env.subgoal().x);

  const Vec2 toward = unit_vector(env.subgoal() - env.dog());
  const std::vector<double> a{toward.x, toward.y};
  const Vec2 before = env.dog();
  const auto r = env.step(a);
  CHECK(r.reward == 0.1);
  CHECK_FALSE(r.terminal);
  CHECK(distance(before, env.dog()) == doctest::Approx(0.1));

  const std::vector<double> bad{1.0};
  CHECK_THROWS_AS(env.step(bad), InvalidInput);
  const std::vector<Vec2> two{{1, 1}, {2, 2}};
  CHECK_THROWS_AS(env.reset_to(make_flock(two), {0, 0}), InvalidInput);
}

TEST_CASE("skill environment ends on reaching the sub-goal") {
  SkillEnvironment env(lesson(SkillKind::Drive));
  const std::vector<Vec2> s{{3, 3}, {3.2, 3}, {3, 3.2}};
  env.reset_to(make_flock(s), {3.5, 3.5});
  bool terminal = false;
  for (int t = 0; t < 100 && !terminal; ++t) {
    const Vec2 d = env.subgoal() - env.dog();
    const double k = std::min(1.0, d.norm() / env.config().params.dt);
    const Vec2 v = k * unit_vector(d);
    const std::vector<double> a{v.x, v.y};
    terminal = env.step(a).terminal;
  }
  CHECK(terminal);
  CHECK(reached(env.dog(), env.subgoal(), 0.1));
  CHECK_FALSE(mission_success(env.flock(), env.config().arena, env.config().params));
}

TEST_CASE("lessons end on hand-off") {
  const std::vector<double> still{0.0, 0.0};

  SkillEnvironment drive(lesson(SkillKind::Drive));
  const std::vector<Vec2> home{{1, 1}, {1.2, 1}, {1, 1.2}};
  drive.reset_to(make_flock(home), {3.5, 3.5});
  CHECK(drive.step(still).terminal);

  SkillEnvironment collect(lesson(SkillKind::Collect));
  const std::vector<Vec2> tight{{3, 3}, {3.2, 3}, {3, 3.2}};
  collect.reset_to(make_flock(tight), {0.5, 0.5});
  CHECK(collect.step(still).terminal);

  const std::vector<Vec2> away{{3, 3}, {3.2, 3}, {3, 3.2}};
  drive.reset_to(make_flock(away), {0.5, 0.5});
  CHECK_FALSE(drive.step(still).terminal);
}

TEST_CASE("train_skill") {
  EpisodeConfig cfg = lesson(SkillKind::Collect);
  cfg.max_steps = 40;
  SUBCASE("zero episodes leave the agent unchanged") {
    ddpg::DdpgAgent agent(ddpg::AgentConfig{}, 2);
    const auto before = std::vector<double>(agent.actor().parameters().begin(),
                                            agent.actor().parameters().end());
    const LearningCurve c = train_skill(SkillKind::Collect, cfg, agent, 0);
    CHECK(c.empty());
    CHECK(std::equal(before.begin(), before.end(), agent.actor().parameters().begin()));
  }
  SUBCASE("same seed, same curve") {
    auto run = [&] {
      ddpg::DdpgAgent agent(ddpg::AgentConfig{}, 3);
      return train_skill(SkillKind::Collect, cfg, agent, 6);
    };
    const LearningCurve a = run(), b = run();
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].steps == b[i].steps);
      CHECK(a[i].cumulative_reward == b[i].cumulative_reward);
      CHECK(std::abs(a[i].reward_per_action) <= 0.1 + 1e-12);
    }
  }
  SUBCASE("mismatched skill") {
    ddpg::DdpgAgent agent(ddpg::AgentConfig{}, 2);
    CHECK_THROWS_AS(train_skill(SkillKind::Drive, cfg, agent, 1), InvalidInput);
  }
  SUBCASE("tail mean") {
    LearningCurve c(5);
    for (int i = 0; i < 5; ++i) c[static_cast<std::size_t>(i)].reward_per_action = 0.02 * i;
    CHECK(tail_mean_reward(c, 2) == doctest::Approx(0.07));
    CHECK(tail_mean_reward(c, 100) == doctest::Approx(0.04));
    CHECK(tail_mean_reward({}, 10) == 0.0);
  }
}

TEST_CASE("mission success predicate") {
  const ArenaConfig arena = Settings{}.arena(4, 4);
  SwarmParams p;
  const std::vector<Vec2> home{{1, 1}, {1.2, 1}, {1, 1.2}};
  CHECK(mission_success(make_flock(home), arena, p));
  const std::vector<Vec2> far{{3.5, 3.5}, {3.6, 3.5}, {3.5, 3.6}};
  CHECK_FALSE(mission_success(make_flock(far), arena, p));

  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    std::vector<Vec2> s(3);
    for (auto& v : s) v = {uniform(rng, 0, 4), uniform(rng, 0, 4)};
    if (!mission_success(make_flock(s), arena, p)) continue;
    // pulling every sheep toward the goal keeps the predicate true
    std::vector<Vec2> shrunk = s;
    for (auto& v : shrunk) v = arena.goal + 0.5 * (v - arena.goal);
    CHECK(mission_success(make_flock(shrunk), arena, p));
  }
}

TEST_CASE("missions") {
  const ArenaConfig arena = Settings{}.arena(4, 4);
  World w{arena, SwarmParams{}, {}, {{3, 3}}};

  SUBCASE("flock already home") {
    const std::vector<Vec2> home{{1, 1}, {1.2, 1}, {1, 1.2}};
    w.flock = make_flock(home);
    const MissionOutcome o = run_baseline_mission(w, 100);
    CHECK(o.result.success);
    CHECK(o.result.n_steps == 0);
    CHECK(o.result.travel_distance == 0.0);
  }
  SUBCASE("one step is not enough") {
    const std::vector<Vec2> far{{3.5, 3.5}, {3.6, 3.5}, {3.5, 3.6}};
    w.flock = make_flock(far);
    const MissionOutcome o = run_baseline_mission(w, 1);
    CHECK_FALSE(o.result.success);
    CHECK(o.result.n_steps == 1);
    CHECK(o.trace.steps.size() == 1);
  }
  SUBCASE("baseline brings a gathered flock home") {
    const std::vector<Vec2> far{{3.0, 3.0}, {3.2, 3.0}, {3.0, 3.2}};
    w.flock = make_flock(far);
    w.dog.position = {3.8, 3.8};
    const MissionOutcome o = run_baseline_mission(w, 1000);
    CHECK(o.result.success);
    CHECK(o.trace.steps.back().reward > 50.0);
  }
  SUBCASE("learned controller shape check") {
    ddpg::AgentConfig odd;
    odd.state_dim = 3;
    ddpg::DdpgAgent bad(odd, 1), good(ddpg::AgentConfig{}, 1);
    CHECK_THROWS_AS(learned_controller(bad, good, std::nullopt), DimensionError);
    CHECK_THROWS_AS(learned_controller(good, bad, std::nullopt), DimensionError);
  }
  SUBCASE("learned controller uses the gate") {
    const auto collect = constant_agent(0.5, 0.0), drive = constant_agent(0.0, 0.5);
    const Controller c = learned_controller(collect, drive, std::nullopt);
    const std::vector<Vec2> gathered{{2, 2}, {2.2, 2}, {2, 2.2}};
    w.flock = make_flock(gathered);
    const ControlDecision d = c(w);
    CHECK(d.behavior == "drive");
    CHECK(d.velocity.x == doctest::Approx(0.0));
    CHECK(d.velocity.y == doctest::Approx(0.5));
    const std::vector<Vec2> strayed{{1, 1}, {1.1, 1}, {3.5, 3.5}};
    w.flock = make_flock(strayed);
    CHECK(c(w).behavior == "collect");
  }
}
