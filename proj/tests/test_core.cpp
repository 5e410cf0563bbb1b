#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "shepherd/config.hpp"
#include "shepherd/errors.hpp"
#include "shepherd/random.hpp"
#include "shepherd/world.hpp"

using namespace shepherd;

TEST_CASE("unit_vector") {
  const Vec2 u = unit_vector({3.0, 4.0});
  CHECK(u.x == doctest::Approx(0.6));
  CHECK(u.y == doctest::Approx(0.8));
  CHECK(unit_vector({0.0, 0.0}) == Vec2{0.0, 0.0});
  CHECK(unit_vector({-2.0, 0.0}) == Vec2{-1.0, 0.0});
  CHECK(unit_vector({5e-10, 0.0}) == Vec2{0.0, 0.0});
}

TEST_CASE("unit_vector has norm one or zero for finite inputs") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double scale = std::pow(10.0, uniform(rng, -12.0, 12.0));
    const Vec2 v{uniform(rng, -1.0, 1.0) * scale, uniform(rng, -1.0, 1.0) * scale};
    const Vec2 u = unit_vector(v);
    REQUIRE(u.finite());
    const double n = u.norm();
    CHECK((n == 0.0 || std::abs(n - 1.0) < 1e-12));
  }
}

TEST_CASE("center_of_mass") {
  const std::vector<Vec2> a{{0, 0}, {2, 0}};
  CHECK(center_of_mass(a) == Vec2{1.0, 0.0});
  const std::vector<Vec2> b{{1, 1}};
  CHECK(center_of_mass(b) == Vec2{1.0, 1.0});
  const std::vector<Vec2> c{{0, 0}, {0, 3}, {3, 0}};
  CHECK(center_of_mass(c).x == doctest::Approx(1.0));
  CHECK(center_of_mass(c).y == doctest::Approx(1.0));
  CHECK_THROWS_AS(center_of_mass(std::vector<Vec2>{}), InvalidInput);
  CHECK_THROWS_AS(center_of_mass(FlockState{}), InvalidInput);
}

TEST_CASE("center_of_mass is permutation invariant and translation equivariant") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec2> pts(1 + trial % 7);
    for (auto& p : pts) p = {uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const Vec2 com = center_of_mass(pts);

    auto shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Vec2 com_s = center_of_mass(shuffled);
    CHECK(com_s.x == doctest::Approx(com.x).epsilon(1e-12));
    CHECK(com_s.y == doctest::Approx(com.y).epsilon(1e-12));

    const Vec2 shift{uniform(rng, -3, 3), uniform(rng, -3, 3)};
    auto moved = pts;
    for (auto& p : moved) p += shift;
    const Vec2 com_m = center_of_mass(moved);
    CHECK(std::abs(com_m.x - (com.x + shift.x)) < 1e-12);
    CHECK(std::abs(com_m.y - (com.y + shift.y)) < 1e-12);
  }
}

TEST_CASE("clamp_to_arena") {
  ArenaConfig arena;  // 4 x 4
  CHECK(clamp_to_arena({-1, 2}, arena) == Vec2{0, 2});
  CHECK(clamp_to_arena({2, 2}, arena) == Vec2{2, 2});
  CHECK(clamp_to_arena({5, 7}, arena) == Vec2{4, 4});

  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Vec2 p{uniform(rng, -10, 10), uniform(rng, -10, 10)};
    const Vec2 once = clamp_to_arena(p, arena);
    CHECK(clamp_to_arena(once, arena) == once);
    CHECK(inside_arena(once, arena));
  }
}

TEST_CASE("arena and parameter validation") {
  ArenaConfig a;
  a.goal = {1, 1};
  CHECK_NOTHROW(a.validate());
  a.goal = {5, 1};
  CHECK_THROWS_AS(a.validate(), InvalidInput);
  a = {};
  a.width = 0;
  CHECK_THROWS_AS(a.validate(), InvalidInput);
  a = {};
  a.goal_radius = 0;
  CHECK_THROWS_AS(a.validate(), InvalidInput);

  SwarmParams p;
  CHECK_NOTHROW(p.validate());
  p.dt = 0;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p = {};
  p.w_sep = -1;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p = {};
  p.w_dog = 0;  // zero weights are allowed
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("default settings carry the published setup values") {
  const Settings s;
  CHECK(s.swarm.r_sheep_sheep == 1.0);
  CHECK(s.swarm.r_sheep_dog == 2.0);
  REQUIRE(s.swarm.f_n_override);
  CHECK(*s.swarm.f_n_override == 1.3);
  CHECK(s.goal_radius == 2.0);
  CHECK(s.swarm.sheep_speed == 0.5);
  CHECK(s.swarm.dt == 0.1);
  CHECK(s.swarm.w_inertia == 0.5);
  CHECK(s.swarm.w_lcm == 1.05);
  CHECK(s.swarm.w_dog == 1.0);
  CHECK(s.swarm.w_sep == 2.0);
  CHECK(s.n_sheep == 3);
}

TEST_CASE("config file parsing") {
  std::istringstream in(
      "# comment\n"
      "dt = 0.2\n"
      "w_sep=1.5   # trailing comment\n"
      "f_n_override = none\n"
      "n_sheep = 5\n"
      "goal_x = 0.5\n"
      "goal_y = 0.75\n"
      "\n");
  const Settings s = parse_settings(in);
  CHECK(s.swarm.dt == 0.2);
  CHECK(s.swarm.w_sep == 1.5);
  CHECK_FALSE(s.swarm.f_n_override.has_value());
  CHECK(s.n_sheep == 5);
  const ArenaConfig a = s.arena(4, 4);
  CHECK(a.goal == Vec2{0.5, 0.75});

  SUBCASE("unknown key") {
    std::istringstream bad("wsep = 1\n");
    CHECK_THROWS_AS(parse_settings(bad), InvalidInput);
  }
  SUBCASE("malformed value") {
    std::istringstream bad("dt = fast\n");
    CHECK_THROWS_AS(parse_settings(bad), InvalidInput);
  }
  SUBCASE("invalid value") {
    std::istringstream bad("dt = -0.1\n");
    CHECK_THROWS_AS(parse_settings(bad), InvalidInput);
  }
  SUBCASE("missing equals") {
    std::istringstream bad("dt 0.1\n");
    CHECK_THROWS_AS(parse_settings(bad), InvalidInput);
  }
  SUBCASE("write then parse reproduces the settings") {
    std::stringstream buf;
    write_settings(buf, s);
    const Settings back = parse_settings(buf);
    CHECK(back.swarm.dt == s.swarm.dt);
    CHECK(back.swarm.w_sep == s.swarm.w_sep);
    CHECK(back.swarm.f_n_override == s.swarm.f_n_override);
    CHECK(back.n_sheep == s.n_sheep);
    CHECK(back.goal == s.goal);
  }
}

TEST_CASE("missing config file names the path") {
  try {
    load_settings("/nonexistent/shepherd.cfg");
    FAIL("expected FileError");
  } catch (const FileError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/shepherd.cfg") != std::string::npos);
  }
}
