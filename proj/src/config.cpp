#include "shepherd/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "shepherd/errors.hpp"

namespace shepherd {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& text, const std::string& where) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw InvalidInput(where + ": expected a number, got '" + text + "'");
  return v;
}

int to_int(const std::string& text, const std::string& where) {
  int v = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end)
    throw InvalidInput(where + ": expected an integer, got '" + text + "'");
  return v;
}

using Setter = std::function<void(Settings&, const std::string&, const std::string&)>;

Setter real(double SwarmParams::*field) {
  return [field](Settings& s, const std::string& v, const std::string& where) {
    s.swarm.*field = to_double(v, where);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"r_sheep_sheep", real(&SwarmParams::r_sheep_sheep)},
      {"r_sheep_dog", real(&SwarmParams::r_sheep_dog)},
      {"w_inertia", real(&SwarmParams::w_inertia)},
      {"w_lcm", real(&SwarmParams::w_lcm)},
      {"w_dog", real(&SwarmParams::w_dog)},
      {"w_sep", real(&SwarmParams::w_sep)},
      {"unit_distance", real(&SwarmParams::unit_distance)},
      {"sheep_speed", real(&SwarmParams::sheep_speed)},
      {"dog_speed", real(&SwarmParams::dog_speed)},
      {"dt", real(&SwarmParams::dt)},
      {"f_n_override",
       [](Settings& s, const std::string& v, const std::string& where) {
         if (v == "none")
           s.swarm.f_n_override.reset();
         else
           s.swarm.f_n_override = to_double(v, where);
       }},
      {"lcm_neighbors",
       [](Settings& s, const std::string& v, const std::string& where) {
         s.swarm.lcm_neighbors = to_int(v, where);
       }},
      {"n_sheep",
       [](Settings& s, const std::string& v, const std::string& where) {
         s.n_sheep = to_int(v, where);
       }},
      {"goal_radius",
       [](Settings& s, const std::string& v, const std::string& where) {
         s.goal_radius = to_double(v, where);
       }},
      {"goal_x",
       [](Settings& s, const std::string& v, const std::string& where) {
         Vec2 g = s.goal.value_or(Vec2{});
         g.x = to_double(v, where);
         s.goal = g;
       }},
      {"goal_y",
       [](Settings& s, const std::string& v, const std::string& where) {
         Vec2 g = s.goal.value_or(Vec2{});
         g.y = to_double(v, where);
         s.goal = g;
       }},
  };
  return table;
}

}  // namespace

void ArenaConfig::validate() const {
  require(positive(width) && positive(height), "arena extents must be positive");
  require(goal.finite() && goal.x >= 0.0 && goal.x <= width && goal.y >= 0.0 &&
              goal.y <= height,
          "goal must lie inside the arena");
  require(positive(goal_radius), "goal_radius must be positive");
}

double ArenaConfig::diagonal() const { return std::hypot(width, height); }

void SwarmParams::validate() const {
  require(positive(r_sheep_sheep) && positive(r_sheep_dog), "sensing radii must be positive");
  require(non_negative(w_inertia) && non_negative(w_lcm) && non_negative(w_dog) &&
              non_negative(w_sep),
          "force weights must be non-negative");
  require(!f_n_override || positive(*f_n_override), "f_n_override must be positive");
  require(positive(unit_distance), "unit_distance must be positive");
  require(positive(sheep_speed) && positive(dog_speed), "speeds must be positive");
  require(positive(dt), "dt must be positive");
  require(lcm_neighbors >= 0, "lcm_neighbors must be >= 0");
}

Vec2 default_goal(double width, double height) { return {0.25 * width, 0.25 * height}; }

ArenaConfig Settings::arena(double width, double height) const {
  ArenaConfig a;
  a.width = width;
  a.height = height;
  a.goal = goal.value_or(default_goal(width, height));
  a.goal_radius = goal_radius;
  a.validate();
  return a;
}

void Settings::validate() const {
  swarm.validate();
  require(n_sheep >= 1, "n_sheep must be >= 1");
  require(positive(goal_radius), "goal_radius must be positive");
  require(!goal || goal->finite(), "goal must be finite");
}

Settings parse_settings(std::istream& in, Settings base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "config line " + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw InvalidInput(where + ": unknown key '" + key + "'");
    it->second(base, value, where);
  }
  base.validate();
  return base;
}

Settings load_settings(const std::string& path, Settings base) {
  std::ifstream in(path);
  if (!in) throw FileError(path, "cannot open config file");
  return parse_settings(in, std::move(base));
}

void write_settings(std::ostream& out, const Settings& s) {
  const auto& p = s.swarm;
  out << std::setprecision(17);
  out << "r_sheep_sheep = " << p.r_sheep_sheep << '\n'
      << "r_sheep_dog = " << p.r_sheep_dog << '\n'
      << "w_inertia = " << p.w_inertia << '\n'
      << "w_lcm = " << p.w_lcm << '\n'
      << "w_dog = " << p.w_dog << '\n'
      << "w_sep = " << p.w_sep << '\n';
  if (p.f_n_override)
    out << "f_n_override = " << *p.f_n_override << '\n';
  else
    out << "f_n_override = none\n";
  out << "unit_distance = " << p.unit_distance << '\n'
      << "sheep_speed = " << p.sheep_speed << '\n'
      << "dog_speed = " << p.dog_speed << '\n'
      << "dt = " << p.dt << '\n'
      << "lcm_neighbors = " << p.lcm_neighbors << '\n'
      << "n_sheep = " << s.n_sheep << '\n'
      << "goal_radius = " << s.goal_radius << '\n';
  if (s.goal) out << "goal_x = " << s.goal->x << '\n' << "goal_y = " << s.goal->y << '\n';
}

}  // namespace shepherd
