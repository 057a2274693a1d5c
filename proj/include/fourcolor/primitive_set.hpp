#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fourcolor/boundary.hpp"
#include "json.hpp"

namespace fourcolor {

/// Interval coloring packed at 2 bits per interval, interval 0 in the low bits.
using PackedScheme = std::uint64_t;
inline constexpr int kMaxIntervals = 32;

inline Color scheme_color(PackedScheme s, int j) { return static_cast<Color>((s >> (2 * j)) & 3u); }
PackedScheme pack_scheme(std::span<const Color> colors);
std::vector<Color> unpack_scheme(PackedScheme s, int k);
/// Digits, interval 0 first, e.g. "1213".
std::string scheme_string(PackedScheme s, int k);
/// y(j) = x(j + shift mod k).
PackedScheme rotate_scheme(PackedScheme s, int k, int shift);
/// Adjacent intervals (cyclically) carry different colors; trivially true for k = 1.
bool scheme_is_proper(PackedScheme s, int k);

/// Sorted, duplicate-free scheme list; the abstract state the property
/// checkers work on.
using SchemeSet = std::vector<PackedScheme>;

/// Colors of the interior faces, in BoundaryState::interior() order.
using Witness = std::vector<Color>;

/// The realizable interval colorings of a boundary, optionally with one
/// interior coloring per scheme that realizes it.
class PrimitiveSet {
 public:
  explicit PrimitiveSet(int k = 1, bool track_witnesses = false)
      : k_(k), track_(track_witnesses) {}

  /// Builds from unsorted entries; on duplicates the first witness wins.
  static PrimitiveSet build(int k, std::vector<std::pair<PackedScheme, Witness>> entries,
                            bool track_witnesses);
  static PrimitiveSet from_schemes(int k, SchemeSet schemes);

  int k() const { return k_; }
  bool tracks_witnesses() const { return track_; }
  const SchemeSet& schemes() const { return schemes_; }
  const Witness& witness(std::size_t idx) const { return witnesses_.at(idx); }
  std::size_t size() const { return schemes_.size(); }
  bool empty() const { return schemes_.empty(); }
  std::optional<std::size_t> find(PackedScheme s) const;

  nlohmann::json to_json() const;

 private:
  int k_;
  bool track_;
  SchemeSet schemes_;
  std::vector<Witness> witnesses_;
};

/// Proper colorings of a k-cycle avoiding the colors in `forbidden_mask`
/// (bit c set = color c excluded). For k = 1 every allowed color qualifies.
SchemeSet cycle_colorings(int k, unsigned forbidden_mask);

/// Primitive set of a freshly seeded boundary: every proper interval coloring
/// avoiding the seed color, witnessed by the seed color.
PrimitiveSet initial_primitive_set(const BoundaryState& seeded);

/// Abstract k-gon primitive set with the polygon colored `seed_color`.
PrimitiveSet polygon_primitive_set(int k, Color seed_color);

/// Calls emit(y) for every scheme y on the post-attachment boundary that
/// extends scheme x when an n-point region colored x(i) is attached on
/// interval i of a k-interval boundary. Emits nothing when x is incompatible.
void extend_scheme(PackedScheme x, int k, int i, int n, const std::function<void(PackedScheme)>& emit);

/// k' after an n-point attachment on a k-interval boundary.
int interval_count_after(int k, int n);

/// Incremental primitive set maintenance across one attachment. The region
/// takes color x(i) for each scheme x; witnesses grow by that color. Throws
/// ScaleLimitError when the result exceeds `max_schemes`.
PrimitiveSet update_on_attach(const PrimitiveSet& pset, int interval, int n,
                              std::size_t max_schemes = 1u << 22);
PrimitiveSet update_on_attach(const PrimitiveSet& pset, const BoundaryState& before,
                              const AttachmentOp& op, std::size_t max_schemes = 1u << 22);

/// Geometry-free 0-point move at interval i (k >= 4): neighbors must agree
/// and merge. Result lives on k - 2 intervals.
SchemeSet filter_zero(const SchemeSet& schemes, int k, int i);
/// Geometry-free 1-point move at interval i (k >= 4): neighbors must differ
/// and become adjacent. Result lives on k - 1 intervals.
SchemeSet filter_one(const SchemeSet& schemes, int k, int i);

}  // namespace fourcolor
