#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shepherd/config.hpp"
#include "shepherd/ddpg/agent.hpp"
#include "shepherd/world.hpp"

namespace shepherd::hddpg {

enum class SkillKind { Collect, Drive };

const char* to_string(SkillKind s);
/// Accepts "collect" / "drive". Throws InvalidInput otherwise.
SkillKind parse_skill(const std::string& name);

/// Policy input: flock centre -> shepherd and sub-goal -> shepherd.
struct Observation {
  Vec2 gcm_to_dog;
  Vec2 subgoal_to_dog;

  /// (gcm.x, gcm.y, sub.x, sub.y)
  std::array<double, 4> flatten() const {
    return {gcm_to_dog.x, gcm_to_dog.y, subgoal_to_dog.x, subgoal_to_dog.y};
  }
};

/// Arena extents (width, height) in meters.
struct Extent {
  double width = 0.0;
  double height = 0.0;
};

/// Ratio of arena diagonals, small over big. Throws InvalidInput on a
/// non-positive extent.
double scale_factor(Extent small, Extent big);

/// Rescales a policy trained in `small` for use in `big`: observations are
/// multiplied by xi, actions by 1/xi.
struct ScaleAdapter {
  double xi = 1.0;
  Extent small;
  Extent big;

  static ScaleAdapter between(Extent small, Extent big);
};

Vec2 current_subgoal(SkillKind skill, const FlockState& flock, const Vec2& goal,
                     const SwarmParams& params);

/// current_subgoal projected into the arena, where the shepherd can reach it.
Vec2 reachable_subgoal(SkillKind skill, const FlockState& flock, const ArenaConfig& arena,
                       const SwarmParams& params);

/// Relative vectors dog - com and dog - subgoal, times xi when an adapter
/// is given.
Observation observe(const Vec2& dog, const FlockState& flock, const Vec2& subgoal,
                    const std::optional<ScaleAdapter>& adapter = std::nullopt);

inline constexpr double kStepReward = 0.1;

/// +0.1 when the shepherd did not move further from its sub-goal, else -0.1.
double step_reward(double d_before, double d_after);

bool reached(const Vec2& dog, const Vec2& subgoal, double tolerance);

/// Collect while some sheep is outside f(N) of the flock centre, else Drive.
SkillKind behavior_gate(const FlockState& flock, const SwarmParams& params);

/// Deterministic actor evaluated through an optional scale adapter:
/// clip(actor(xi * s) / xi, [-1, 1]).
class ScaledPolicy {
 public:
  ScaledPolicy(const ddpg::DdpgAgent& agent, double xi);

  double xi() const { return xi_; }
  std::vector<double> pre_clip(std::span<const double> state) const;
  std::vector<double> operator()(std::span<const double> state) const;

 private:
  const ddpg::DdpgAgent* agent_;
  double xi_;
};

/// ScaledPolicy for `adapter`, or the bare actor (xi = 1) when absent.
ScaledPolicy wrap_policy_with_scale(const ddpg::DdpgAgent& agent,
                                    const std::optional<ScaleAdapter>& adapter);

}  // namespace shepherd::hddpg
