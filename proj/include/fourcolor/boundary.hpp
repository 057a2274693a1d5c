#pragma once

#include <optional>
#include <stdexcept>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fourcolor/planar_map.hpp"

namespace fourcolor {

enum class IntervalKind { Old, New, Boundary };

const char* to_string(IntervalKind kind);

/// A maximal boundary arc between two consecutive outward-pointing vertices.
struct Interval {
  int index = 0;
  std::vector<VertexId> arc;  // endpoints included; arc.size() - 1 edges
  std::set<FaceId> faces;     // interior faces bordering the arc
  IntervalKind kind = IntervalKind::Old;
};

struct BoundaryVertex {
  VertexId id;
  bool outward = false;  // third edge leaves toward the exterior
  bool fresh = false;    // created by the most recent attachment
};

/// "Add an n-point region on interval `interval`, colored `color`."
struct AttachmentOp {
  int interval = 0;
  int n = 0;
  Color color = 0;

  bool operator==(const AttachmentOp&) const = default;
};

/// Whether an n-point attachment is admissible on a boundary with k intervals.
///
/// k >= 4 admits every n. With three intervals a 0-point region would merge
/// two adjacent intervals; with two intervals a 1-point region would leave a
/// single outward edge with the same region on both sides. k = 1 admits
/// nothing and must be closed instead.
bool attachment_allowed(int k, int n);

/// The outer boundary of the colored interior.
///
/// The boundary is a simple cycle of vertices (`ring`), each flagged outward
/// or inward; `ring_faces()[j]` is the interior face on the edge
/// ring[j] -> ring[j+1]. When k >= 2 the ring starts at the outward vertex that
/// opens interval 0.
class BoundaryState {
 public:
  /// Synthetic k-gon seed: vertices p0..p{k-1}, face "seed", all outward.
  static BoundaryState polygon(int k, Color color);

  int k() const;
  std::vector<Interval> intervals() const;
  /// Interior faces bordering each interval, indexed like intervals().
  std::vector<std::set<FaceId>> interval_faces() const;

  const std::vector<BoundaryVertex>& ring() const { return ring_; }
  const std::vector<FaceId>& ring_faces() const { return ring_faces_; }
  /// Interior faces in attachment order; the seed comes first.
  const std::vector<FaceId>& interior() const { return interior_; }
  const std::map<FaceId, Walk>& walks() const { return walks_; }
  /// Interior faces sharing an edge, recorded as edges are created.
  const std::set<std::pair<FaceId, FaceId>>& adjacency() const { return adjacency_; }
  /// Colors given by the attachment ops (provisional in pipeline use).
  const Coloring& colors() const { return colors_; }
  const FaceId& seed_face() const { return interior_.front(); }
  Color seed_color() const { return colors_.at(seed_face()); }
  bool contains_face(const FaceId& f) const { return walks_.contains(f); }

  /// The interior faces as a map fragment.
  PlanarMap fragment() const;
  /// The fragment closed by one provisional face along the whole boundary.
  PlanarMap closed_fragment(const FaceId& outer = "outer") const;

 private:
  friend BoundaryState seed_boundary(const PlanarMap&, const FaceId&, Color);
  friend BoundaryState attach_region(const BoundaryState&, int, const FaceId&,
                                     const std::vector<VertexId>&, Color);
  friend BoundaryState attach(const BoundaryState&, const AttachmentOp&);

  std::vector<std::size_t> outward_positions() const;

  std::vector<BoundaryVertex> ring_;
  std::vector<FaceId> ring_faces_;
  std::vector<FaceId> interior_;
  std::map<FaceId, Walk> walks_;
  std::set<std::pair<FaceId, FaceId>> adjacency_;
  Coloring colors_;
  int next_synthetic_ = 0;
};

/// Seeds the boundary with one face of a cubic map. Vertices of degree 3 are
/// outward; degree-2 vertices (only in two-face maps) are not.
BoundaryState seed_boundary(const PlanarMap& map, const FaceId& face, Color color);

/// Attaches `region` along interval `interval`. `new_points` are the region's
/// vertices off the boundary, ordered from the interval's opening endpoint.
/// The result's interval order is [E_L, N_1..N_{n-1}, E_R, i+2, ..., i-2]
/// (n >= 1) or [M, i+2, ..., i-2] (n = 0).
BoundaryState attach_region(const BoundaryState& state, int interval, const FaceId& region,
                            const std::vector<VertexId>& new_points, Color color);

/// Attaches a synthetic region with fresh vertex and face ids.
BoundaryState attach(const BoundaryState& state, const AttachmentOp& op);

/// An exterior face that meets the boundary exactly along one interval.
struct AttachableInterval {
  int interval = 0;
  FaceId face;
  int n = 0;
  std::vector<VertexId> new_points;
};

std::vector<FaceId> exterior_faces(const BoundaryState& state, const PlanarMap& full);

/// The exterior face along `interval` if it touches the boundary nowhere else.
std::optional<AttachableInterval> attachable_along(const BoundaryState& state, const PlanarMap& full,
                                                   int interval);

/// Lowest-index interval whose exterior face is attachable with an n the
/// current k admits. Absent means the existence claim failed for this state.
std::optional<AttachableInterval> find_attachable_interval(const BoundaryState& state,
                                                           const PlanarMap& full);

/// Nesting search: when the face on an interval reappears elsewhere on the
/// boundary, continue among the intervals enclosed between its touches.
std::optional<AttachableInterval> find_attachable_nested(const BoundaryState& state,
                                                         const PlanarMap& full);

class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Colors the last exterior face. Requires k = 1 and a color distinct from
/// every interior face along the boundary.
Coloring close(const BoundaryState& state, const FaceId& closure_face, Color color);
/// As above, taking the single remaining exterior face of `full`.
Coloring close(const BoundaryState& state, const PlanarMap& full, Color color);

}  // namespace fourcolor
