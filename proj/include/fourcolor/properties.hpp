#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fourcolor/primitive_set.hpp"
#include "json.hpp"

namespace fourcolor {

/// A simple-region addition: n = 0 (neighbors merge) or n = 1 (neighbors meet).
struct Move {
  int interval = 0;
  int n = 0;

  bool operator==(const Move&) const = default;
};

using Trail = std::vector<Move>;

std::string to_string(const Move& m);
nlohmann::json trail_to_json(const Trail& t);
Trail trail_from_json(const nlohmann::json& j);

enum class Property { A, B };

enum class Quantification {
  Strict,  // every syntactic move counts; an emptied set is a violation
  Pruned,  // moves that no surviving scheme can satisfy are unavailable
};

enum class OuterColorReading {
  OneScheme,    // some single scheme avoids the color on every interval
  PerInterval,  // every interval individually admits a scheme avoiding it
};

struct PropertyOptions {
  Quantification quantification = Quantification::Strict;
  OuterColorReading reading = OuterColorReading::OneScheme;
  std::size_t max_states = 2'000'000;
  int max_k = 12;
};

struct PropertyReport {
  Property property = Property::A;
  bool holds = false;
  std::optional<Trail> violating_trail;
  /// Property B: colors that stay avoidable in every reachable state.
  std::set<Color> outer_colors;
  /// Property B: for each color not in outer_colors, a trail reaching a
  /// state where it is no longer avoidable.
  std::array<std::optional<Trail>, kNumColors> color_trails;
  std::uint64_t states_explored = 0;
  std::uint64_t memo_hits = 0;

  nlohmann::json to_json() const;
};

/// One move applied to (k, schemes); returns (k', schemes').
std::pair<int, SchemeSet> apply_move(int k, const SchemeSet& schemes, const Move& m);
/// Applies a trail move by move. Stops early if k drops below 4.
std::pair<int, SchemeSet> replay_trail(int k, SchemeSet schemes, const Trail& trail);

/// Colors d such that the set contains a witness avoiding d (under `reading`).
unsigned avoid_mask(int k, const SchemeSet& schemes, OuterColorReading reading);

/// Moves available at k (empty for k <= 3): for each interval, 0 then 1.
std::vector<Move> moves_at(int k);

/// Memoized exhaustive check of Property A. Throws ScaleLimitError when
/// the state space exceeds options.max_states or k exceeds options.max_k.
PropertyReport check_property_A(int k, const SchemeSet& schemes, const PropertyOptions& options = {});
/// Memoized exhaustive check of Property B.
PropertyReport check_property_B(int k, const SchemeSet& schemes, const PropertyOptions& options = {});

inline constexpr int kNaiveMaxK = 5;
inline constexpr std::size_t kNaiveMaxSchemes = 64;

/// Plain enumeration of every move sequence, no memoization. Cross-checks
/// the memoized checkers; rejects k > 5 or more than 64 schemes.
PropertyReport check_naive(int k, const SchemeSet& schemes, Property property,
                           const PropertyOptions& options = {});

}  // namespace fourcolor
