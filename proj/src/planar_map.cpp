#include "fourcolor/planar_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fourcolor/errors.hpp"

namespace fourcolor {

VertexPair::VertexPair(VertexId u, VertexId v) {
  if (v < u) std::swap(u, v);
  a = std::move(u);
  b = std::move(v);
}

PlanarMap::PlanarMap(const std::map<FaceId, Walk>& faces) {
  for (const auto& [id, w] : faces) add_face(id, w);
}

void PlanarMap::add_face(const FaceId& id, Walk walk) {
  auto& ws = faces_[id];
  if (ws.empty()) {
    ws.push_back(std::move(walk));
  } else {
    ws.front() = std::move(walk);
  }
}

void PlanarMap::add_hole(const FaceId& id, Walk walk) {
  auto it = faces_.find(id);
  if (it == faces_.end()) throw InputError("hole for unknown face " + id);
  it->second.push_back(std::move(walk));
}

const Walk& PlanarMap::walk(const FaceId& id) const { return walks(id).front(); }

const std::vector<Walk>& PlanarMap::walks(const FaceId& id) const {
  auto it = faces_.find(id);
  if (it == faces_.end()) throw InputError("unknown face " + id);
  return it->second;
}

bool PlanarMap::has_holes() const {
  return std::any_of(faces_.begin(), faces_.end(),
                     [](const auto& kv) { return kv.second.size() > 1; });
}

std::vector<FaceId> PlanarMap::face_ids() const {
  std::vector<FaceId> ids;
  ids.reserve(faces_.size());
  for (const auto& kv : faces_) ids.push_back(kv.first);
  return ids;
}

std::set<VertexId> PlanarMap::vertices() const {
  std::set<VertexId> vs;
  for (const auto& [id, ws] : faces_)
    for (const auto& w : ws) vs.insert(w.begin(), w.end());
  return vs;
}

std::size_t PlanarMap::num_edges() const {
  std::size_t sides = 0;
  for (const auto& [id, ws] : faces_)
    for (const auto& w : ws) sides += w.size();
  return sides / 2;
}

std::map<VertexId, int> PlanarMap::degrees() const {
  std::map<VertexId, int> deg;
  for (const auto& [id, ws] : faces_)
    for (const auto& w : ws)
      for (const auto& v : w) ++deg[v];
  return deg;
}

std::map<VertexPair, std::vector<FaceId>> PlanarMap::edge_sides() const {
  std::map<VertexPair, std::vector<FaceId>> sides;
  for (const auto& [id, ws] : faces_) {
    for (const auto& w : ws) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        sides[VertexPair(w[j], w[(j + 1) % w.size()])].push_back(id);
      }
    }
  }
  return sides;
}

bool PlanarMap::has_parallel_edges() const {
  for (const auto& [pair, fs] : edge_sides())
    if (fs.size() > 2) return true;
  return false;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<std::vector<VertexId>> PlanarMap::components() const {
  const auto vs = vertices();
  std::vector<VertexId> order(vs.begin(), vs.end());
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  UnionFind uf(order.size());
  for (const auto& [id, ws] : faces_)
    for (const auto& w : ws)
      for (std::size_t j = 0; j + 1 < w.size(); ++j) uf.unite(index[w[j]], index[w[j + 1]]);
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) groups[uf.find(i)].push_back(order[i]);
  std::vector<std::vector<VertexId>> out;
  for (auto& kv : groups) out.push_back(std::move(kv.second));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

ValidationReport validate_map(const PlanarMap& map) {
  ValidationReport report;
  auto& problems = report.problems;
  if (map.num_faces() < 2) problems.push_back("map has fewer than 2 faces");

  std::size_t hole_walks = 0;
  for (const auto& [id, ws] : map.faces()) {
    hole_walks += ws.size() - 1;
    for (const auto& w : ws) {
      if (w.size() < 2) {
        problems.push_back("face " + id + " has a walk shorter than 2 vertices");
        continue;
      }
      std::set<VertexId> seen;
      for (const auto& v : w) {
        if (!seen.insert(v).second) problems.push_back("face " + id + " walk repeats vertex " + v);
      }
    }
  }

  for (const auto& [pair, fs] : map.edge_sides()) {
    const std::string name = "{" + pair.a + "," + pair.b + "}";
    if (fs.size() % 2 != 0) {
      problems.push_back("edge " + name + " shared by " + std::to_string(fs.size()) +
                         (fs.size() == 1 ? " face" : " faces"));
      continue;
    }
    std::map<FaceId, std::size_t> per_face;
    for (const auto& f : fs) ++per_face[f];
    for (const auto& [f, count] : per_face) {
      if (count > fs.size() / 2) problems.push_back("edge " + name + " borders face " + f + " on both sides");
    }
  }

  const auto comps = map.components();
  std::map<VertexId, std::size_t> comp_of;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& v : comps[c]) comp_of[v] = c;
  for (const auto& [id, ws] : map.faces()) {
    std::set<std::size_t> used;
    for (const auto& w : ws) {
      if (w.empty()) continue;
      if (!used.insert(comp_of[w.front()]).second)
        problems.push_back("face " + id + " has two walks in one component");
    }
  }
  if (comps.size() > 1 + hole_walks) {
    problems.push_back("map is disconnected (" + std::to_string(comps.size()) + " components)");
  }

  const long long v = static_cast<long long>(map.num_vertices());
  const long long e = static_cast<long long>(map.num_edges());
  const long long f = static_cast<long long>(map.num_faces());
  const long long expected = 1 + static_cast<long long>(comps.size());
  if (v - e + f != expected) {
    std::ostringstream os;
    os << "Euler characteristic mismatch: V - E + F = " << v << " - " << e << " + " << f << " = "
       << (v - e + f) << ", expected " << expected;
    problems.push_back(os.str());
  }
  return report;
}

bool DualGraph::adjacent(const FaceId& a, const FaceId& b) const {
  return a < b ? edges.contains({a, b}) : edges.contains({b, a});
}

std::map<FaceId, std::vector<FaceId>> DualGraph::neighbors() const {
  std::map<FaceId, std::vector<FaceId>> nb;
  for (const auto& n : nodes) nb[n];
  for (const auto& [a, b] : edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  return nb;
}

DualGraph dual(const PlanarMap& map) {
  DualGraph g;
  g.nodes = map.face_ids();
  for (const auto& [pair, fs] : map.edge_sides()) {
    for (std::size_t x = 0; x < fs.size(); ++x) {
      for (std::size_t y = x + 1; y < fs.size(); ++y) {
        if (fs[x] == fs[y]) continue;
        g.edges.insert(std::minmax(fs[x], fs[y]));
      }
    }
  }
  return g;
}

namespace {

VertexId split_vertex_id(const VertexId& v, const VertexId& toward) { return v + "~" + toward; }

// Cyclic order of the neighbors of v, read off the face corners at v.
std::vector<VertexId> rotation_at(const PlanarMap& map, const VertexId& v) {
  std::map<VertexId, std::vector<VertexId>> link;
  for (const auto& [id, ws] : map.faces()) {
    for (const auto& w : ws) {
      auto it = std::find(w.begin(), w.end(), v);
      if (it == w.end()) continue;
      const std::size_t j = static_cast<std::size_t>(it - w.begin());
      const VertexId& prev = w[(j + w.size() - 1) % w.size()];
      const VertexId& next = w[(j + 1) % w.size()];
      if (prev == next) throw InputError("parallel edges at vertex " + v + " cannot be cubified");
      link[prev].push_back(next);
      link[next].push_back(prev);
    }
  }
  for (const auto& [u, ls] : link) {
    if (ls.size() != 2) throw InputError("parallel edges at vertex " + v + " cannot be cubified");
  }
  std::vector<VertexId> order;
  VertexId prev;
  VertexId cur = link.begin()->first;
  do {
    order.push_back(cur);
    const auto& ls = link[cur];
    VertexId next = (order.size() == 1 || ls[0] != prev) ? ls[0] : ls[1];
    prev = cur;
    cur = next;
  } while (cur != order.front() && order.size() <= link.size());
  if (order.size() != link.size()) throw InputError("faces around vertex " + v + " do not form a single cycle");
  return order;
}

}  // namespace

std::pair<PlanarMap, CubifyRecord> cubify(const PlanarMap& map) {
  CubifyRecord record;
  record.original_faces = map.face_ids();
  const auto deg = map.degrees();
  std::set<VertexId> replaced;
  for (const auto& [v, d] : deg) {
    if (d < 3) throw InputError("degree below 3 unsupported (vertex " + v + ")");
    if (d > 3) replaced.insert(v);
  }
  if (replaced.empty()) return {map, record};

  PlanarMap out;
  for (const auto& [id, ws] : map.faces()) {
    bool primary = true;
    for (const auto& w : ws) {
      Walk nw;
      for (std::size_t j = 0; j < w.size(); ++j) {
        const VertexId& v = w[j];
        if (!replaced.contains(v)) {
          nw.push_back(v);
          continue;
        }
        nw.push_back(split_vertex_id(v, w[(j + w.size() - 1) % w.size()]));
        nw.push_back(split_vertex_id(v, w[(j + 1) % w.size()]));
      }
      if (primary) {
        out.add_face(id, std::move(nw));
        primary = false;
      } else {
        out.add_hole(id, std::move(nw));
      }
    }
  }
  for (const auto& v : replaced) {
    Walk ring;
    for (const auto& u : rotation_at(map, v)) {
      ring.push_back(split_vertex_id(v, u));
      record.vertex_origin[ring.back()] = v;
    }
    FaceId fid = "cub:" + v;
    while (map.has_face(fid) || out.has_face(fid)) fid += "'";
    out.add_face(fid, std::move(ring));
    record.added_faces.push_back(fid);
    record.face_origin[fid] = v;
  }
  return {std::move(out), std::move(record)};
}

Coloring uncubify(const Coloring& coloring, const CubifyRecord& record) {
  if (record.original_faces.empty()) return coloring;  // nothing was cubified
  Coloring out;
  for (const auto& f : record.original_faces) {
    auto it = coloring.find(f);
    if (it == coloring.end()) throw InputError("coloring missing face " + f);
    out[f] = it->second;
  }
  return out;
}

PlanarMap component_submap(const PlanarMap& map, const std::vector<VertexId>& component) {
  const std::set<VertexId> members(component.begin(), component.end());
  PlanarMap out;
  for (const auto& [id, ws] : map.faces()) {
    for (const auto& w : ws) {
      if (!w.empty() && members.contains(w.front())) {
        out.add_face(id, w);
        break;
      }
    }
  }
  return out;
}

}  // namespace fourcolor
