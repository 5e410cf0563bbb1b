#include "shepherd/world.hpp"

#include <algorithm>

#include "shepherd/errors.hpp"

namespace shepherd {

std::vector<Vec2> FlockState::positions() const {
  std::vector<Vec2> out;
  out.reserve(sheep.size());
  for (const auto& s : sheep) out.push_back(s.position);
  return out;
}

Vec2 center_of_mass(std::span<const Vec2> points) {
  if (points.empty()) throw InvalidInput("center_of_mass: empty point set");
  Vec2 sum;
  for (const auto& p : points) sum += p;
  return sum * (1.0 / static_cast<double>(points.size()));
}

Vec2 center_of_mass(const FlockState& flock) {
  if (flock.sheep.empty()) throw InvalidInput("center_of_mass: empty flock");
  Vec2 sum;
  for (const auto& s : flock.sheep) sum += s.position;
  return sum * (1.0 / static_cast<double>(flock.sheep.size()));
}

Vec2 clamp_to_arena(const Vec2& p, const ArenaConfig& arena) {
  return {std::clamp(p.x, 0.0, arena.width), std::clamp(p.y, 0.0, arena.height)};
}

bool inside_arena(const Vec2& p, const ArenaConfig& arena) {
  return p.x >= 0.0 && p.x <= arena.width && p.y >= 0.0 && p.y <= arena.height;
}

FlockState make_flock(std::span<const Vec2> positions) {
  FlockState f;
  f.sheep.reserve(positions.size());
  for (const auto& p : positions) f.sheep.push_back({p, {}});
  return f;
}

}  // namespace shepherd
