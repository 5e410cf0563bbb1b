#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "shepherd/vec2.hpp"

namespace shepherd {

/// Rectangular arena with its origin at the (0,0) corner.
struct ArenaConfig {
  double width = 4.0;
  double height = 4.0;
  Vec2 goal{0.0, 0.0};
  double goal_radius = 2.0;

  /// Throws InvalidInput when an invariant does not hold.
  void validate() const;
  double diagonal() const;
};

/// Physical parameters of the sheep model and the shepherd.
struct SwarmParams {
  double r_sheep_sheep = 1.0;  // sheep-sheep sensing range
  double r_sheep_dog = 2.0;    // sheep-shepherd sensing range
  double w_inertia = 0.5;
  double w_lcm = 1.05;
  double w_dog = 1.0;
  double w_sep = 2.0;
  std::optional<double> f_n_override = 1.3;  // fixed gathered radius
  double unit_distance = 1.0;
  double sheep_speed = 0.5;  // m/s
  double dog_speed = 1.0;    // m/s, rule-based shepherd only
  double dt = 0.1;           // s
  /// Sheep attract toward the centre of their k nearest flock-mates
  /// (including themselves); 0 means the whole flock.
  int lcm_neighbors = 0;

  void validate() const;
};

/// Goal used when neither the scenario nor the config file places one.
Vec2 default_goal(double width, double height);

/// Everything a configuration file can set. Arena extents usually come from
/// the command line; the goal is then derived unless explicitly overridden.
struct Settings {
  SwarmParams swarm;
  int n_sheep = 3;
  double goal_radius = 2.0;
  std::optional<Vec2> goal;

  ArenaConfig arena(double width, double height) const;
  void validate() const;
};

/// Parses `key = value` lines on top of `base`. `#` starts a comment.
/// Unknown keys and malformed values raise InvalidInput naming the line.
Settings parse_settings(std::istream& in, Settings base = {});
Settings load_settings(const std::string& path, Settings base = {});

/// Writes every key with its current value, in parse_settings syntax.
void write_settings(std::ostream& out, const Settings& s);

}  // namespace shepherd
