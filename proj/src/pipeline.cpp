#include "fourcolor/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

#include "fourcolor/errors.hpp"
#include "fourcolor/oracle.hpp"
#include "fourcolor/primitive_set.hpp"

namespace fourcolor {

namespace {

nlohmann::json coloring_json(const Coloring& c) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [f, col] : c) j[f] = col;
  return j;
}

struct Grown {
  ComponentRun run;
  std::vector<std::string> violations;
};

// Witness colors in interior order, or only the seed when none survive.
Coloring partial_coloring(const BoundaryState& state, const PrimitiveSet& pset) {
  Coloring out;
  if (pset.empty()) {
    out[state.seed_face()] = state.seed_color();
    return out;
  }
  const Witness& w = pset.witness(0);
  for (std::size_t j = 0; j < w.size(); ++j) out[state.interior()[j]] = w[j];
  return out;
}

Coloring restrict_to(const Coloring& c, const PlanarMap& map) {
  Coloring out;
  for (const auto& [f, col] : c)
    if (map.has_face(f)) out[f] = col;
  return out;
}

// The growth loop on one connected, hole-free component. Returns the run and
// any claim violations; on violation the coloring is completed by the oracle.
Grown grow_component(const PlanarMap& map, const FaceId& seed_face, Color seed_color, const PipelineOptions& options) {
  Grown g;
  ComponentRun& run = g.run;
  run.seed_face = seed_face;
  run.seed_color = seed_color;
  CubifyRecord record;
  if (map.num_faces() == 2) {
    run.working = map;
  } else {
    if (map.has_parallel_edges()) throw InputError("multigraph maps are not supported");
    std::tie(run.working, record) = cubify(map);
  }
  if (run.working.num_faces() > options.max_faces) {
    throw ScaleLimitError("scale limit: " + std::to_string(run.working.num_faces()) + " faces after cubification, cap " +
                          std::to_string(options.max_faces));
  }

  BoundaryState state = seed_boundary(run.working, seed_face, seed_color);
  PrimitiveSet pset = initial_primitive_set(state);
  std::optional<std::string> violation;
  Coloring partial;

  while (exterior_faces(state, run.working).size() > 1) {
    const auto a = find_attachable_interval(state, run.working);
    if (!a) {
      violation = "no attachable interval at k=" + std::to_string(state.k()) + " with " +
                  std::to_string(state.interior().size()) + " faces placed";
      partial = partial_coloring(state, pset);
      break;
    }
    PrimitiveSet next = update_on_attach(pset, a->interval, a->n);
    if (next.empty()) {
      violation = "primitive set emptied attaching " + a->face + " at interval " + std::to_string(a->interval);
      partial = partial_coloring(state, pset);
      break;
    }
    state = attach_region(state, a->interval, a->face, a->new_points, next.witness(0).back());
    pset = std::move(next);
    run.trace.push_back({{a->interval, a->n, 0}, a->face, a->new_points, pset.size()});
    if (options.check_oracle && state.interior().size() <= kOracleMaxFaces && state.k() <= kOracleMaxIntervals) {
      ++run.oracle_checked;
      if (primitive_set_reference(state).schemes() != pset.schemes()) ++run.oracle_mismatches;
    }
  }

  if (!violation) {
    const auto ext = exterior_faces(state, run.working);
    run.closure_face = ext.front();
    if (state.k() != 1) {
      violation = "boundary not reduced at closure (k=" + std::to_string(state.k()) + ")";
      partial = partial_coloring(state, pset);
    } else {
      // The first surviving scheme fixes every interior color and the closure color.
      const Witness& w = pset.witness(0);
      for (std::size_t j = 0; j < run.trace.size(); ++j) run.trace[j].op.color = w[j + 1];
      try {
        run.coloring = close(replay_trace(run), *run.closure_face, scheme_color(pset.schemes().front(), 0));
      } catch (const ClosureError& e) {
        violation = std::string("closure failed: ") + e.what();
        partial = partial_coloring(state, pset);
      }
    }
  }

  if (!violation) {
    const Coloring original = record.empty() ? run.coloring : uncubify(run.coloring, record);
    if (!verify_coloring(map, original).ok) {
      violation = "extracted coloring is improper";
      partial = {{seed_face, seed_color}};
    }
  }

  if (violation) {
    g.violations.push_back(*violation);
    run.used_fallback = true;
    const DualGraph d = dual(run.working);
    auto filled = four_color_bruteforce(d, partial);
    if (!filled) filled = four_color_bruteforce(d, {{seed_face, seed_color}});
    if (!filled) throw std::runtime_error("no 4-coloring found by exhaustive search");
    run.coloring = *filled;
  }
  return g;
}

}  // namespace

nlohmann::json ComponentRun::to_json() const {
  nlohmann::json trace_json = nlohmann::json::array();
  for (const auto& s : trace) {
    trace_json.push_back({{"interval", s.op.interval},
                          {"n", s.op.n},
                          {"color", s.op.color},
                          {"face", s.face},
                          {"new_points", s.new_points},
                          {"schemes", s.schemes_after}});
  }
  nlohmann::json j = {{"seed_face", seed_face},   {"seed_color", seed_color},
                      {"trace", trace_json},      {"used_fallback", used_fallback},
                      {"faces", working.num_faces()}};
  j["closure_face"] = closure_face ? nlohmann::json(*closure_face) : nlohmann::json(nullptr);
  if (oracle_checked > 0) {
    j["oracle_checked"] = oracle_checked;
    j["oracle_mismatches"] = oracle_mismatches;
  }
  return j;
}

std::size_t ColoringRun::trace_length() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.trace.size();
  return n;
}

nlohmann::json ColoringRun::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) comps.push_back(c.to_json());
  return {{"faces", input.num_faces()},     {"components", comps},   {"coloring", coloring_json(coloring)},
          {"used_fallback", used_fallback}, {"violations", violations}, {"verified", verified},
          {"trace_length", trace_length()}, {"seconds", seconds}};
}

VerifyResult verify_coloring(const PlanarMap& map, const Coloring& coloring) {
  for (const auto& f : map.face_ids()) {
    auto it = coloring.find(f);
    if (it == coloring.end()) throw InputError("coloring missing face " + f);
    if (it->second >= kNumColors) throw InputError("color out of range for face " + f);
  }
  VerifyResult r;
  for (const auto& [a, b] : dual(map).edges) {
    if (coloring.at(a) == coloring.at(b)) r.violations.emplace_back(a, b);
  }
  r.ok = r.violations.empty();
  return r;
}

BoundaryState replay_trace(const ComponentRun& run) {
  BoundaryState s = seed_boundary(run.working, run.seed_face, run.seed_color);
  for (const auto& step : run.trace) s = attach_region(s, step.op.interval, step.face, step.new_points, step.op.color);
  return s;
}

std::vector<FaceId> find_sea_faces(const PlanarMap& map) {
  const DualGraph d = dual(map);
  const auto nb = d.neighbors();
  std::vector<FaceId> out;
  for (const auto& removed : d.nodes) {
    std::set<FaceId> seen{removed};
    std::deque<FaceId> queue;
    for (const auto& f : d.nodes) {
      if (f == removed) continue;
      seen.insert(f);
      queue.push_back(f);
      break;
    }
    while (!queue.empty()) {
      const FaceId f = queue.front();
      queue.pop_front();
      auto it = nb.find(f);
      if (it == nb.end()) continue;
      for (const auto& g : it->second)
        if (seen.insert(g).second) queue.push_back(g);
    }
    if (seen.size() < d.nodes.size()) out.push_back(removed);
  }
  return out;
}

ColoringRun color_map(const PlanarMap& map, const std::optional<FaceId>& seed_face, std::uint64_t rng_seed,
                      const PipelineOptions& options) {
  if (map.has_holes()) throw InputError("map has islands; use color_with_islands");
  return color_with_islands(map, rng_seed, options, seed_face);
}

ColoringRun color_with_islands(const PlanarMap& map, std::uint64_t, const PipelineOptions& options,
                               const std::optional<FaceId>& seed_face) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = validate_map(map);
  if (!report.ok()) throw InputError("invalid map: " + report.problems.front());
  if (seed_face && !map.has_face(*seed_face)) throw InputError("unknown seed face " + *seed_face);
  if (options.seed_color >= kNumColors) throw InputError("seed color out of range");

  ColoringRun run;
  run.input = map;
  const auto comps = map.components();
  auto component_of = [&](const VertexId& v) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::binary_search(comps[c].begin(), comps[c].end(), v)) return c;
    throw std::logic_error("vertex outside every component");
  };

  const FaceId first = seed_face ? *seed_face : map.face_ids().front();
  struct Pending {
    std::size_t component;
    FaceId seed;
    Color color;
  };
  std::deque<Pending> queue{{component_of(map.walk(first).front()), first, options.seed_color}};
  std::set<std::size_t> done;
  while (!queue.empty()) {
    const Pending p = queue.front();
    queue.pop_front();
    if (!done.insert(p.component).second) continue;
    const PlanarMap sub = comps.size() == 1 ? map : component_submap(map, comps[p.component]);
    Grown g = grow_component(sub, p.seed, p.color, options);
    for (auto& v : g.violations) run.violations.push_back(std::move(v));
    run.used_fallback = run.used_fallback || g.run.used_fallback;
    for (const auto& f : sub.face_ids()) run.coloring[f] = g.run.coloring.at(f);
    // Islands inside faces of this component, each seeded at its sea.
    for (const auto& f : sub.face_ids()) {
      const auto& walks = map.walks(f);
      for (const auto& w : walks) {
        const std::size_t c = component_of(w.front());
        if (!done.contains(c)) queue.push_back({c, f, run.coloring.at(f)});
      }
    }
    run.components.push_back(std::move(g.run));
  }
  if (done.size() != comps.size()) throw InputError("some components are not reachable through sea faces");

  run.coloring = restrict_to(run.coloring, map);
  run.verified = verify_coloring(map, run.coloring).ok;
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

}  // namespace fourcolor
