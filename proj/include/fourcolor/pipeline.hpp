#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourcolor/boundary.hpp"
#include "fourcolor/planar_map.hpp"
#include "json.hpp"

namespace fourcolor {

/// One attachment of a real face during a run.
struct TraceStep {
  AttachmentOp op;
  FaceId face;
  std::vector<VertexId> new_points;
  std::size_t schemes_after = 0;
};

/// One connected component colored by the growth loop.
struct ComponentRun {
  PlanarMap working;  // cubified component map the trace refers to
  FaceId seed_face;
  Color seed_color = 0;
  std::vector<TraceStep> trace;
  std::optional<FaceId> closure_face;
  Coloring coloring;  // on the working map
  bool used_fallback = false;
  std::size_t oracle_checked = 0;
  std::size_t oracle_mismatches = 0;

  nlohmann::json to_json() const;
};

struct ColoringRun {
  PlanarMap input;
  std::vector<ComponentRun> components;  // mainland first, then islands in BFS order
  Coloring coloring;
  bool used_fallback = false;
  std::vector<std::string> violations;
  bool verified = false;
  double seconds = 0.0;

  std::size_t trace_length() const;
  nlohmann::json to_json() const;
};

struct PipelineOptions {
  std::size_t max_faces = 40;  // after cubification
  Color seed_color = 0;
  /// Compare the incremental set with the oracle at every step within its caps.
  bool check_oracle = false;
};

/// Grows a coloring of an island-free map from one seed face.
/// `rng_seed` is accepted for interface symmetry; the run is deterministic.
ColoringRun color_map(const PlanarMap& map, const std::optional<FaceId>& seed_face, std::uint64_t rng_seed,
                      const PipelineOptions& options = {});

/// Colors the mainland first, then every island seeded at its sea face with
/// the sea's color pinned, nesting levels in breadth-first order.
ColoringRun color_with_islands(const PlanarMap& map, std::uint64_t rng_seed, const PipelineOptions& options = {},
                               const std::optional<FaceId>& seed_face = std::nullopt);

struct VerifyResult {
  bool ok = true;
  std::vector<std::pair<FaceId, FaceId>> violations;  // adjacent, equally colored
};

/// Throws InputError when a face of `map` has no color.
VerifyResult verify_coloring(const PlanarMap& map, const Coloring& coloring);

/// Rebuilds the final boundary of a component run from its trace.
BoundaryState replay_trace(const ComponentRun& run);

/// Faces whose removal disconnects the dual graph.
std::vector<FaceId> find_sea_faces(const PlanarMap& map);

}  // namespace fourcolor
