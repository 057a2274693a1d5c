#pragma once

#include <cstdint>

#include "fourcolor/planar_map.hpp"

namespace fourcolor {

struct GeneratorOptions {
  int max_n = 2;
  std::size_t budget = 200'000;  // search nodes per attempt
  int attempts = 16;
};

/// A random cubic sphere map with exactly `faces` faces and no parallel
/// edges: a polygon seed grown by synthetic attachments until a single
/// closure face remains. Deterministic in `seed`. Requires faces >= 4.
PlanarMap generate_map(int faces, std::uint64_t seed, const GeneratorOptions& options = {});

}  // namespace fourcolor
