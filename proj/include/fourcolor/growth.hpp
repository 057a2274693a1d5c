#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fourcolor/boundary.hpp"
#include "fourcolor/primitive_set.hpp"
#include "json.hpp"

namespace fourcolor {

/// A k-gon seed followed by synthetic attachments.
struct GrowthTrace {
  int polygon_k = 3;
  Color seed_color = 0;
  std::vector<AttachmentOp> ops;

  bool operator==(const GrowthTrace&) const = default;
  nlohmann::json to_json() const;
  static GrowthTrace from_json(const nlohmann::json& j);
};

struct GrownState {
  BoundaryState state;
  PrimitiveSet pset;
};

/// Replays every op, maintaining the primitive set incrementally.
/// Throws IllegalAttachment if an op is not admissible where it lands.
GrownState replay_growth(const GrowthTrace& trace);

struct GrowthCaps {
  int max_k = 10;
  std::size_t max_interior = 12;
  int max_ops = 6;
  int max_n = 3;
};

/// Random admissible attachments on a polygon seed. Every step keeps the
/// caps, leaves a nonempty primitive set and stops once k drops to 1.
/// The op color is the region color in the lowest surviving scheme's witness.
GrowthTrace random_growth(std::mt19937_64& rng, int polygon_k, const GrowthCaps& caps);

/// Independent generator per (seed, index) so any item replays on its own.
std::mt19937_64 indexed_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace fourcolor
