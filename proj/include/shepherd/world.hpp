#pragma once

#include <span>
#include <vector>

#include "shepherd/config.hpp"
#include "shepherd/vec2.hpp"

namespace shepherd {

struct Sheep {
  Vec2 position;
  Vec2 prev_force;  // total force applied on the previous step
};

/// The N rule-based agents. N is fixed for the lifetime of an episode.
struct FlockState {
  std::vector<Sheep> sheep;

  std::size_t size() const { return sheep.size(); }
  std::vector<Vec2> positions() const;
};

struct ShepherdState {
  Vec2 position;
};

/// Arithmetic mean. Throws InvalidInput on an empty sequence.
Vec2 center_of_mass(std::span<const Vec2> points);
Vec2 center_of_mass(const FlockState& flock);

/// Componentwise clamp into [0,width] x [0,height].
Vec2 clamp_to_arena(const Vec2& p, const ArenaConfig& arena);

bool inside_arena(const Vec2& p, const ArenaConfig& arena);

/// Flock built from bare positions with zero previous force.
FlockState make_flock(std::span<const Vec2> positions);

}  // namespace shepherd
