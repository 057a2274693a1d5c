#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fourcolor {

using VertexId = std::string;
using FaceId = std::string;
using Walk = std::vector<VertexId>;
using Color = std::uint8_t;
using Coloring = std::map<FaceId, Color>;

inline constexpr int kNumColors = 4;

/// Unordered vertex pair, stored with first <= second.
struct VertexPair {
  VertexId a;
  VertexId b;

  VertexPair(VertexId u, VertexId v);
  auto operator<=>(const VertexPair&) const = default;
};

/// A map on the sphere given by the boundary walks of its faces.
///
/// Every face has one primary walk. A face that surrounds islands carries
/// additional hole walks, one per enclosed component; all walks of a face lie
/// in distinct connected components of the vertex graph. Vertices are
/// implicit in the walks and edges are consecutive walk pairs.
class PlanarMap {
 public:
  PlanarMap() = default;
  explicit PlanarMap(const std::map<FaceId, Walk>& faces);

  void add_face(const FaceId& id, Walk walk);
  void add_hole(const FaceId& id, Walk walk);

  /// All walks per face; index 0 is the primary walk.
  const std::map<FaceId, std::vector<Walk>>& faces() const { return faces_; }
  bool has_face(const FaceId& id) const { return faces_.contains(id); }
  const Walk& walk(const FaceId& id) const;
  const std::vector<Walk>& walks(const FaceId& id) const;
  bool has_holes() const;

  std::vector<FaceId> face_ids() const;
  std::set<VertexId> vertices() const;
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_vertices() const { return vertices().size(); }
  /// Half the number of walk sides; parallel edges count separately.
  std::size_t num_edges() const;

  /// Vertex degree equals the number of face corners at the vertex.
  std::map<VertexId, int> degrees() const;
  /// For every vertex pair joined by at least one edge, the faces owning a
  /// side on it (a face appears once per side).
  std::map<VertexPair, std::vector<FaceId>> edge_sides() const;
  /// True if some vertex pair carries more than one edge.
  bool has_parallel_edges() const;

  /// Connected components of the vertex graph, each as a sorted vertex list,
  /// ordered by their smallest vertex.
  std::vector<std::vector<VertexId>> components() const;

  bool operator==(const PlanarMap&) const = default;

 private:
  std::map<FaceId, std::vector<Walk>> faces_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks the sphere-map invariants: simple walks, every edge on exactly two
/// distinct faces, Euler's formula, connectivity (modulo declared holes).
ValidationReport validate_map(const PlanarMap& map);

/// Region adjacency: faces sharing at least one edge.
struct DualGraph {
  std::vector<FaceId> nodes;
  std::set<std::pair<FaceId, FaceId>> edges;  // first < second

  bool adjacent(const FaceId& a, const FaceId& b) const;
  std::map<FaceId, std::vector<FaceId>> neighbors() const;
};

DualGraph dual(const PlanarMap& map);

struct CubifyRecord {
  std::vector<FaceId> original_faces;
  std::vector<FaceId> added_faces;
  std::map<FaceId, VertexId> face_origin;
  std::map<VertexId, VertexId> vertex_origin;

  bool empty() const { return added_faces.empty(); }
};

/// Replaces every vertex of degree d > 3 by a d-gon face so that the result
/// is cubic. Throws InputError for vertices of degree below 3 or for parallel
/// edges at a vertex that must be replaced.
std::pair<PlanarMap, CubifyRecord> cubify(const PlanarMap& map);

/// Drops the faces added by cubify. Throws InputError if an original face is
/// uncolored.
Coloring uncubify(const Coloring& coloring, const CubifyRecord& record);

/// The sub-map made of the walks lying in one vertex component. Faces with no
/// walk there are dropped; faces with a walk there keep only that walk.
PlanarMap component_submap(const PlanarMap& map, const std::vector<VertexId>& component);

}  // namespace fourcolor
