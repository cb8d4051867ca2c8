#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lamplighter/ball.hpp"
#include "lamplighter/configuration.hpp"
#include "lamplighter/errors.hpp"
#include "lamplighter/path_spec.hpp"

namespace lamplighter {

class ProbeOutsideBallError : public InputError {
 public:
  using InputError::InputError;
};

class ProbeInObstacleError : public InputError {
 public:
  using InputError::InputError;
};

struct Component {
  std::size_t id = 0;
  std::size_t size = 0;
  Configuration representative;  // least member in canonical order
  // Largest distance from a member to the removed set, measured inside the
  // ball; nullopt when no removed vertex is reachable from the component.
  std::optional<std::int64_t> max_distance_to_removed;
};

struct ComponentDecomposition {
  std::vector<Component> components;  // ordered by representative
  // Per ball member: component id, or nullopt for removed members.
  std::vector<std::optional<std::size_t>> component_of;
  std::size_t removed_in_ball = 0;
};

// Connected components of the subgraph of the ball induced on members that
// are not in `removed`. Removed vertices outside the ball are ignored.
ComponentDecomposition decompose(const Ball& ball, std::span<const Configuration> removed);

std::vector<Component> components_after_removal(const Ball& ball,
                                                std::span<const Configuration> removed);

struct ProbeReport {
  Configuration probe;
  std::optional<std::size_t> component;
  // Word distance to the obstacle. Exact when `exact`; otherwise only a lower
  // bound (the obstacle was enumerated inside B(e, R + K)).
  std::int64_t distance = 0;
  bool exact = false;
};

struct SeparationReport {
  std::string obstacle;            // path label, or "none"
  std::size_t obstacle_size = 0;   // obstacle vertices inside the ball
  int thickening = 0;              // K
  int radius = 0;                  // R
  std::size_t ball_size = 0;
  std::size_t removed_size = 0;    // K-neighbourhood members inside the ball
  std::vector<Component> components;
  std::vector<ProbeReport> probes;
  bool separated = false;

  std::string verdict() const { return separated ? "separated-in-ball" : "connected-in-ball"; }
};

// Builds B(e, R), removes the K-neighbourhood of the path (within the ball),
// decomposes the rest, and places both probes.
// Throws ProbeOutsideBallError / ProbeInObstacleError for misplaced probes.
SeparationReport separation_report(const PathSpec& path, int thickening, int radius,
                                   const Configuration& first, const Configuration& second,
                                   std::size_t member_cap = kDefaultMemberCap);

// Same with an explicit obstacle. `obstacle` must contain every obstacle
// vertex of word length <= R + K for the neighbourhood to be exact.
SeparationReport separation_report(std::string label, std::span<const Configuration> obstacle,
                                   int thickening, int radius, const Configuration& first,
                                   const Configuration& second,
                                   std::size_t member_cap = kDefaultMemberCap);

nlohmann::json to_json(const SeparationReport& report);

}  // namespace lamplighter
