#pragma once

#include <cstdint>
#include <optional>

#include "fourcolor/boundary.hpp"
#include "fourcolor/planar_map.hpp"
#include "fourcolor/primitive_set.hpp"

namespace fourcolor {

/// Independent brute-force ground truth. Nothing here depends on the
/// incremental primitive-set calculus.

struct ColoringEnumeration {
  std::uint64_t count = 0;
  std::optional<Coloring> sample;  // first coloring in enumeration order
};

inline constexpr std::size_t kOracleMaxFaces = 12;
inline constexpr int kOracleMaxIntervals = 12;

/// First-fit backtracking over faces in sorted order and colors 0..3.
/// `fixed` pins some faces to given colors.
std::optional<Coloring> four_color_bruteforce(const DualGraph& adjacency, const Coloring& fixed = {});

/// Exact count of proper colorings with `num_colors` colors (1..4).
/// Throws ScaleLimitError above 16 faces.
ColoringEnumeration count_colorings(const DualGraph& adjacency, int num_colors);

struct ReferenceOptions {
  /// Require adjacent intervals to take different colors.
  bool adjacent_intervals_differ = true;
  std::size_t max_faces = kOracleMaxFaces;
  int max_intervals = kOracleMaxIntervals;
};

/// Primitive set by enumeration: every proper coloring of the interior faces
/// (seed face pinned to its seed color), and for each, every interval
/// coloring that avoids the colors of the faces bordering each interval.
/// Witnesses are the first interior coloring found per scheme.
PrimitiveSet primitive_set_reference(const BoundaryState& state, const ReferenceOptions& options = {});

/// Proper colorings of a k-cycle drawn from the colors not in `excluded`,
/// by direct enumeration of all 4^k assignments.
std::uint64_t count_cycle_colorings_bruteforce(int k, unsigned excluded_mask);

}  // namespace fourcolor
