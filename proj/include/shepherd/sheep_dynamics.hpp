#pragma once

#include <cstddef>
#include <span>

#include "shepherd/config.hpp"
#include "shepherd/world.hpp"

namespace shepherd {

/// Per-sheep force breakdown for one step.
struct SheepForces {
  Vec2 escape;
  Vec2 separation;
  Vec2 grouping;
  Vec2 total;
};

/// Sum of unit repulsions away from every shepherd within r_sheep_dog.
Vec2 escape_force(const Vec2& sheep_pos, std::span<const Vec2> dogs, const SwarmParams& params);

/// Sum of unit repulsions away from every other sheep within r_sheep_sheep.
Vec2 separation_force(std::size_t sheep_index, const FlockState& flock, const SwarmParams& params);

/// Unit attraction toward the local centre of mass.
Vec2 grouping_force(const Vec2& sheep_pos, const Vec2& lcm);

/// The centre a sheep is attracted to: the whole flock's centre of mass, or
/// that of its lcm_neighbors nearest flock-mates (self included, ties by index).
Vec2 local_center(std::size_t sheep_index, const FlockState& flock, const SwarmParams& params);

Vec2 total_force(const Vec2& prev, const Vec2& grouping, const Vec2& escape,
                 const Vec2& separation, const SwarmParams& params);

SheepForces sheep_forces(std::size_t sheep_index, const FlockState& flock,
                         std::span<const Vec2> dogs, const SwarmParams& params);

/// Synchronous update: every sheep reads the state at t. Each sheep moves
/// sheep_speed*dt along its normalised total force (or stays put when that
/// force is zero), then is clamped into the arena.
FlockState step_flock(const FlockState& flock, std::span<const Vec2> dogs,
                      const SwarmParams& params, const ArenaConfig& arena);

}  // namespace shepherd
