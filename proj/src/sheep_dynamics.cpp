#include "shepherd/sheep_dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "shepherd/errors.hpp"

namespace shepherd {

Vec2 escape_force(const Vec2& sheep_pos, std::span<const Vec2> dogs, const SwarmParams& params) {
  Vec2 f;
  for (const auto& dog : dogs) {
    const Vec2 away = sheep_pos - dog;
    if (away.norm() <= params.r_sheep_dog) f += unit_vector(away);
  }
  return f;
}

Vec2 separation_force(std::size_t sheep_index, const FlockState& flock, const SwarmParams& params) {
  if (sheep_index >= flock.size()) throw InvalidInput("separation_force: sheep index out of range");
  const Vec2 self = flock.sheep[sheep_index].position;
  Vec2 f;
  for (std::size_t k = 0; k < flock.size(); ++k) {
    if (k == sheep_index) continue;
    const Vec2 away = self - flock.sheep[k].position;
    if (away.norm() <= params.r_sheep_sheep) f += unit_vector(away);
  }
  return f;
}

Vec2 grouping_force(const Vec2& sheep_pos, const Vec2& lcm) { return unit_vector(lcm - sheep_pos); }

Vec2 local_center(std::size_t sheep_index, const FlockState& flock, const SwarmParams& params) {
  const std::size_t n = flock.size();
  if (sheep_index >= n) throw InvalidInput("local_center: sheep index out of range");
  const auto k = static_cast<std::size_t>(params.lcm_neighbors);
  if (k == 0 || k >= n) return center_of_mass(flock);

  const Vec2 self = flock.sheep[sheep_index].position;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return distance(self, flock.sheep[a].position) < distance(self, flock.sheep[b].position);
  });
  Vec2 sum;
  for (std::size_t j = 0; j < k; ++j) sum += flock.sheep[order[j]].position;
  return sum * (1.0 / static_cast<double>(k));
}

Vec2 total_force(const Vec2& prev, const Vec2& grouping, const Vec2& escape,
                 const Vec2& separation, const SwarmParams& params) {
  return params.w_inertia * prev + params.w_lcm * grouping + params.w_dog * escape +
         params.w_sep * separation;
}

SheepForces sheep_forces(std::size_t sheep_index, const FlockState& flock,
                         std::span<const Vec2> dogs, const SwarmParams& params) {
  const Sheep& s = flock.sheep.at(sheep_index);
  SheepForces f;
  f.escape = escape_force(s.position, dogs, params);
  f.separation = separation_force(sheep_index, flock, params);
  f.grouping = grouping_force(s.position, local_center(sheep_index, flock, params));
  f.total = total_force(s.prev_force, f.grouping, f.escape, f.separation, params);
  return f;
}

FlockState step_flock(const FlockState& flock, std::span<const Vec2> dogs,
                      const SwarmParams& params, const ArenaConfig& arena) {
  FlockState next = flock;
  const double stride = params.sheep_speed * params.dt;
  for (std::size_t i = 0; i < flock.size(); ++i) {
    const SheepForces f = sheep_forces(i, flock, dogs, params);
    const Vec2 moved = flock.sheep[i].position + stride * unit_vector(f.total);
    next.sheep[i].position = clamp_to_arena(moved, arena);
    next.sheep[i].prev_force = f.total;
  }
  return next;
}

}  // namespace shepherd
