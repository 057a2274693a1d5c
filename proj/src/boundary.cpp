#include "fourcolor/boundary.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fourcolor/errors.hpp"

namespace fourcolor {

const char* to_string(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::Old: return "old";
    case IntervalKind::New: return "new";
    case IntervalKind::Boundary: return "boundary";
  }
  return "?";
}

bool attachment_allowed(int k, int n) {
  if (n < 0 || k < 2) return false;
  if (k == 2) return n != 1;
  if (k == 3) return n != 0;
  return true;
}

BoundaryState BoundaryState::polygon(int k, Color color) {
  if (k < 2) throw InputError("polygon seed needs at least 2 sides");
  BoundaryState s;
  Walk w;
  for (int j = 0; j < k; ++j) {
    w.push_back("p" + std::to_string(j));
    s.ring_.push_back({w.back(), true, false});
  }
  s.ring_faces_.assign(static_cast<std::size_t>(k), "seed");
  s.interior_.push_back("seed");
  s.walks_["seed"] = std::move(w);
  s.colors_["seed"] = color;
  return s;
}

std::vector<std::size_t> BoundaryState::outward_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ring_.size(); ++j)
    if (ring_[j].outward) out.push_back(j);
  return out;
}

int BoundaryState::k() const {
  const auto n = outward_positions().size();
  return n == 0 ? 1 : static_cast<int>(n);
}

std::vector<Interval> BoundaryState::intervals() const {
  std::vector<Interval> out;
  const auto outs = outward_positions();
  const std::size_t m = ring_.size();
  if (outs.size() < 2) {
    Interval iv;
    for (const auto& v : ring_) iv.arc.push_back(v.id);
    iv.arc.push_back(ring_.front().id);
    iv.faces.insert(ring_faces_.begin(), ring_faces_.end());
    out.push_back(std::move(iv));
    return out;
  }
  for (std::size_t i = 0; i < outs.size(); ++i) {
    Interval iv;
    iv.index = static_cast<int>(i);
    const std::size_t a = outs[i];
    const std::size_t b = outs[(i + 1) % outs.size()];
    for (std::size_t pos = a;; pos = (pos + 1) % m) {
      iv.arc.push_back(ring_[pos].id);
      if (pos == b && iv.arc.size() > 1) break;
      iv.faces.insert(ring_faces_[pos]);
    }
    const int fresh_ends = int(ring_[a].fresh) + int(ring_[b].fresh);
    iv.kind = fresh_ends == 2 ? IntervalKind::New
              : fresh_ends == 1 ? IntervalKind::Boundary
                                : IntervalKind::Old;
    out.push_back(std::move(iv));
  }
  return out;
}

std::vector<std::set<FaceId>> BoundaryState::interval_faces() const {
  std::vector<std::set<FaceId>> out;
  for (auto& iv : intervals()) out.push_back(std::move(iv.faces));
  return out;
}

PlanarMap BoundaryState::fragment() const { return PlanarMap(walks_); }

PlanarMap BoundaryState::closed_fragment(const FaceId& outer) const {
  PlanarMap m = fragment();
  Walk w;
  for (const auto& v : ring_) w.push_back(v.id);
  m.add_face(outer, std::move(w));
  return m;
}

BoundaryState seed_boundary(const PlanarMap& map, const FaceId& face, Color color) {
  if (!map.has_face(face)) throw InputError("unknown face " + face);
  if (color >= kNumColors) throw InputError("seed color out of range");
  const auto deg = map.degrees();
  const Walk& w = map.walk(face);
  BoundaryState s;
  for (const auto& v : w) {
    const int d = deg.at(v);
    if (d > 3) throw InputError("map is not cubic at vertex " + v);
    s.ring_.push_back({v, d == 3, false});
  }
  s.ring_faces_.assign(w.size(), face);
  auto first_out = std::find_if(s.ring_.begin(), s.ring_.end(), [](const auto& v) { return v.outward; });
  if (first_out != s.ring_.end()) {
    std::rotate(s.ring_.begin(), first_out, s.ring_.end());
  }
  s.interior_.push_back(face);
  s.walks_[face] = w;
  s.colors_[face] = color;
  return s;
}

BoundaryState attach_region(const BoundaryState& state, int interval, const FaceId& region,
                            const std::vector<VertexId>& new_points, Color color) {
  const int k = state.k();
  const int n = static_cast<int>(new_points.size());
  if (!attachment_allowed(k, n)) {
    throw IllegalAttachment("illegal attachment at k=" + std::to_string(k) + " (n=" + std::to_string(n) + ")");
  }
  if (interval < 0 || interval >= k) {
    throw IllegalAttachment("illegal attachment at k=" + std::to_string(k) + ": no interval " +
                            std::to_string(interval));
  }
  if (state.contains_face(region)) throw IllegalAttachment("face " + region + " is already interior");
  if (color >= kNumColors) throw IllegalAttachment("color out of range");

  const auto outs = state.outward_positions();
  const auto& ring = state.ring_;
  const std::size_t m = ring.size();
  const std::size_t a = outs[static_cast<std::size_t>(interval)];
  const std::size_t b = outs[static_cast<std::size_t>((interval + 1) % k)];

  Walk region_walk;
  std::set<FaceId> arc_faces;
  for (std::size_t pos = a;; pos = (pos + 1) % m) {
    region_walk.push_back(ring[pos].id);
    if (pos == b) break;
    arc_faces.insert(state.ring_faces_[pos]);
  }
  for (auto it = new_points.rbegin(); it != new_points.rend(); ++it) region_walk.push_back(*it);

  BoundaryState next;
  next.interior_ = state.interior_;
  next.walks_ = state.walks_;
  next.adjacency_ = state.adjacency_;
  next.colors_ = state.colors_;
  next.next_synthetic_ = state.next_synthetic_;

  // Remaining arc q .. p, then the new points.
  for (std::size_t pos = b;; pos = (pos + 1) % m) {
    BoundaryVertex v = ring[pos];
    v.fresh = false;
    if (pos == a || pos == b) v.outward = false;
    next.ring_.push_back(v);
    if (pos == a) break;
    next.ring_faces_.push_back(state.ring_faces_[pos]);
  }
  for (const auto& w : new_points) {
    next.ring_faces_.push_back(region);
    next.ring_.push_back({w, true, true});
  }
  next.ring_faces_.push_back(region);

  VertexId anchor;
  if (k == 2) {
    if (n > 0) anchor = new_points.back();
  } else {
    anchor = ring[outs[static_cast<std::size_t>((interval + k - 1) % k)]].id;
  }
  if (!anchor.empty()) {
    auto it = std::find_if(next.ring_.begin(), next.ring_.end(),
                           [&](const auto& v) { return v.id == anchor; });
    const auto shift = it - next.ring_.begin();
    std::rotate(next.ring_.begin(), it, next.ring_.end());
    std::rotate(next.ring_faces_.begin(), next.ring_faces_.begin() + shift, next.ring_faces_.end());
  }

  for (const auto& f : arc_faces) next.adjacency_.insert(std::minmax(f, region));
  next.interior_.push_back(region);
  next.walks_[region] = std::move(region_walk);
  next.colors_[region] = color;
  return next;
}

BoundaryState attach(const BoundaryState& state, const AttachmentOp& op) {
  int counter = state.next_synthetic_;
  std::vector<VertexId> points;
  for (int j = 0; j < op.n; ++j) points.push_back("w" + std::to_string(counter++));
  const FaceId region = "r" + std::to_string(state.interior_.size());
  BoundaryState next = attach_region(state, op.interval, region, points, op.color);
  next.next_synthetic_ = counter;
  return next;
}

std::vector<FaceId> exterior_faces(const BoundaryState& state, const PlanarMap& full) {
  std::vector<FaceId> out;
  for (const auto& f : full.face_ids())
    if (!state.contains_face(f)) out.push_back(f);
  return out;
}

namespace {

// Exterior face owning the other side of the boundary edge at ring position pos.
std::optional<FaceId> exterior_face_at(const BoundaryState& state,
                                       const std::map<VertexPair, std::vector<FaceId>>& sides,
                                       std::size_t pos) {
  const auto& ring = state.ring();
  const VertexPair e(ring[pos].id, ring[(pos + 1) % ring.size()].id);
  auto it = sides.find(e);
  if (it == sides.end()) return std::nullopt;
  for (const auto& f : it->second)
    if (!state.contains_face(f)) return f;
  return std::nullopt;
}

std::vector<std::size_t> outward_positions_of(const BoundaryState& state) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < state.ring().size(); ++j)
    if (state.ring()[j].outward) out.push_back(j);
  return out;
}

std::optional<AttachableInterval> attachable_along_impl(
    const BoundaryState& state, const PlanarMap& full,
    const std::map<VertexPair, std::vector<FaceId>>& sides, int interval) {
  const int k = state.k();
  if (k < 2 || interval < 0 || interval >= k) return std::nullopt;
  const auto outs = outward_positions_of(state);
  const auto& ring = state.ring();
  const std::size_t a = outs[static_cast<std::size_t>(interval)];
  const auto face = exterior_face_at(state, sides, a);
  if (!face) return std::nullopt;

  std::vector<VertexId> arc;
  for (std::size_t pos = a;; pos = (pos + 1) % ring.size()) {
    arc.push_back(ring[pos].id);
    if (ring[pos].outward && arc.size() > 1) break;
  }
  std::set<VertexId> on_ring;
  for (const auto& v : ring) on_ring.insert(v.id);

  const Walk& w = full.walk(*face);
  std::set<VertexId> touching;
  for (const auto& v : w)
    if (on_ring.contains(v)) touching.insert(v);
  if (touching != std::set<VertexId>(arc.begin(), arc.end())) return std::nullopt;

  // The arc must be a contiguous run of the face walk, in either direction.
  const std::size_t len = w.size();
  const std::size_t start = static_cast<std::size_t>(std::find(w.begin(), w.end(), arc.front()) - w.begin());
  auto matches = [&](int dir) {
    for (std::size_t j = 0; j < arc.size(); ++j) {
      const std::size_t pos = dir > 0 ? (start + j) % len : (start + len - j % len) % len;
      if (w[pos] != arc[j]) return false;
    }
    return true;
  };
  int dir = 0;
  if (matches(+1)) dir = +1;
  else if (matches(-1)) dir = -1;
  if (dir == 0) return std::nullopt;

  AttachableInterval out;
  out.interval = interval;
  out.face = *face;
  out.n = static_cast<int>(len - arc.size());
  // New points continue from p away from the arc.
  for (int j = 1; j <= out.n; ++j) {
    const std::size_t pos = dir > 0 ? (start + len - static_cast<std::size_t>(j)) % len
                                    : (start + static_cast<std::size_t>(j)) % len;
    out.new_points.push_back(w[pos]);
  }
  return out;
}

}  // namespace

std::optional<AttachableInterval> attachable_along(const BoundaryState& state, const PlanarMap& full,
                                                   int interval) {
  return attachable_along_impl(state, full, full.edge_sides(), interval);
}

std::optional<AttachableInterval> find_attachable_interval(const BoundaryState& state,
                                                           const PlanarMap& full) {
  const int k = state.k();
  if (k < 2) return std::nullopt;
  const auto sides = full.edge_sides();
  for (int i = 0; i < k; ++i) {
    auto found = attachable_along_impl(state, full, sides, i);
    if (found && attachment_allowed(k, found->n)) return found;
  }
  return std::nullopt;
}

std::optional<AttachableInterval> find_attachable_nested(const BoundaryState& state,
                                                         const PlanarMap& full) {
  const int k = state.k();
  if (k < 2) return std::nullopt;
  const auto sides = full.edge_sides();
  const auto outs = outward_positions_of(state);
  const auto& ring = state.ring();

  // Interval index of every ring position.
  std::vector<int> owner(ring.size());
  for (int i = 0; i < k; ++i) {
    const std::size_t a = outs[static_cast<std::size_t>(i)];
    const std::size_t b = outs[static_cast<std::size_t>((i + 1) % k)];
    for (std::size_t pos = a; pos != b; pos = (pos + 1) % ring.size()) owner[pos] = i;
  }
  std::vector<std::optional<FaceId>> face_of(static_cast<std::size_t>(k));
  std::vector<std::set<int>> touched(static_cast<std::size_t>(k));
  for (std::size_t pos = 0; pos < ring.size(); ++pos) {
    const auto f = exterior_face_at(state, sides, pos);
    if (!f) continue;
    if (pos == outs[static_cast<std::size_t>(owner[pos])]) face_of[static_cast<std::size_t>(owner[pos])] = f;
  }
  for (int i = 0; i < k; ++i) {
    if (!face_of[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < k; ++j)
      if (face_of[static_cast<std::size_t>(j)] == face_of[static_cast<std::size_t>(i)])
        touched[static_cast<std::size_t>(i)].insert(j);
  }

  // Search intervals lo..hi-1; a face that reappears sends the search into
  // the gaps between its touches.
  std::function<std::optional<AttachableInterval>(int, int)> search = [&](int lo, int hi) {
    std::optional<AttachableInterval> none;
    for (int i = lo; i < hi; ++i) {
      const auto& t = touched[static_cast<std::size_t>(i)];
      if (t.size() <= 1) {
        auto found = attachable_along_impl(state, full, sides, i);
        if (found && attachment_allowed(k, found->n)) return found;
        continue;
      }
      int prev = -1;
      for (int j : t) {
        if (prev >= 0 && j - prev > 1) {
          auto found = search(std::max(prev + 1, lo), std::min(j, hi));
          if (found) return found;
        }
        prev = j;
      }
    }
    return none;
  };
  return search(0, k);
}

Coloring close(const BoundaryState& state, const FaceId& closure_face, Color color) {
  if (state.k() != 1) throw ClosureError("boundary not reduced (k=" + std::to_string(state.k()) + ")");
  if (color >= kNumColors) throw ClosureError("color out of range");
  const auto ivs = state.intervals();
  for (const auto& f : ivs.front().faces) {
    if (state.colors().at(f) == color) throw ClosureError("closure infeasible: color clashes with face " + f);
  }
  Coloring out = state.colors();
  out[closure_face] = color;
  return out;
}

Coloring close(const BoundaryState& state, const PlanarMap& full, Color color) {
  const auto ext = exterior_faces(state, full);
  if (ext.size() != 1) {
    throw ClosureError("closure needs exactly one exterior face, found " + std::to_string(ext.size()));
  }
  return close(state, ext.front(), color);
}

}  // namespace fourcolor
