#include "fourcolor/generator.hpp"

#include <algorithm>
#include <functional>

#include "fourcolor/boundary.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/growth.hpp"
#include "fourcolor/primitive_set.hpp"

namespace fourcolor {

namespace {

// Fewest attachments taking k intervals down to 1.
int steps_to_close(int k) { return k == 1 ? 0 : (k - 1) / 2 + 1; }

bool closes_cleanly(const PlanarMap& m) {
  if (!validate_map(m).ok() || m.has_parallel_edges()) return false;
  for (const auto& [v, d] : m.degrees())
    if (d != 3) return false;
  return true;
}

}  // namespace

PlanarMap generate_map(int faces, std::uint64_t seed, const GeneratorOptions& options) {
  if (faces < 4) throw InputError("generated maps need at least 4 faces");
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    auto rng = indexed_rng(seed, static_cast<std::uint64_t>(attempt));
    const int k0 = std::uniform_int_distribution<int>(3, std::min(5, faces - 1))(rng);
    std::size_t nodes = 0;
    std::optional<PlanarMap> found;

    std::function<bool(const BoundaryState&, int)> grow = [&](const BoundaryState& s, int remaining) {
      if (++nodes > options.budget) return false;
      if (remaining == 0) {
        if (s.k() != 1) return false;
        PlanarMap m = s.closed_fragment("outer");
        if (!closes_cleanly(m)) return false;
        found = std::move(m);
        return true;
      }
      const int k = s.k();
      const auto ivs = s.intervals();
      std::vector<std::pair<int, int>> moves;
      for (int i = 0; i < k; ++i) {
        for (int n = 0; n <= options.max_n; ++n) {
          if (!attachment_allowed(k, n)) continue;
          const int k2 = interval_count_after(k, n);
          const int left = remaining - 1;
          if (left == 0 ? k2 != 1 : (k2 < 2 || steps_to_close(k2) > left)) continue;
          if (n == 0) {
            // A 0-point region on a single edge, or leaving a single edge, doubles an edge.
            const std::size_t arc_edges = ivs[static_cast<std::size_t>(i)].arc.size() - 1;
            if (arc_edges < 2 || s.ring().size() - arc_edges < 2) continue;
          }
          moves.emplace_back(i, n);
        }
      }
      std::shuffle(moves.begin(), moves.end(), rng);
      for (auto [i, n] : moves) {
        if (grow(attach(s, {i, n, 0}), remaining - 1)) return true;
        if (nodes > options.budget) return false;
      }
      return false;
    };
    if (grow(BoundaryState::polygon(k0, 0), faces - 2)) return *found;
  }
  throw ScaleLimitError("scale limit: map generation exhausted its search budget");
}

}  // namespace fourcolor
