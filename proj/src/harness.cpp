#include "fourcolor/harness.hpp"

#include <algorithm>

#include "fourcolor/errors.hpp"
#include "fourcolor/oracle.hpp"

namespace fourcolor {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Skipped: return "skipped";
    case Verdict::Discarded: return "discarded";
    case Verdict::Unconfirmed: return "unconfirmed";
  }
  return "?";
}

namespace {

nlohmann::json ops_json(const std::vector<AttachmentOp>& ops) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& op : ops) arr.push_back({{"interval", op.interval}, {"n", op.n}});
  return arr;
}

nlohmann::json schemes_json(int k, const SchemeSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto x : s) arr.push_back(scheme_string(x, k));
  return arr;
}

nlohmann::json brief(const std::optional<PropertyReport>& r) {
  if (!r) return nullptr;
  nlohmann::json j = {{"holds", r->holds}, {"states", r->states_explored}};
  if (r->property == Property::B) {
    j["outer_colors"] = nlohmann::json::array();
    for (auto c : r->outer_colors) j["outer_colors"].push_back(static_cast<int>(c));
  }
  if (r->violating_trail) j["trail"] = trail_to_json(*r->violating_trail);
  return j;
}

nlohmann::json caps_json(const HarnessOptions& o) {
  return {{"max_k", o.properties.max_k},
          {"max_states", o.properties.max_states},
          {"growth_max_k", o.growth.max_k},
          {"growth_max_interior", o.growth.max_interior},
          {"growth_max_ops", o.growth.max_ops},
          {"growth_max_n", o.growth.max_n},
          {"max_polygon", o.max_polygon}};
}

struct Checked {
  PropertyReport a, b;
  bool ok() const { return a.holds && b.holds; }
};

Checked check_both(int k, const SchemeSet& s, const PropertyOptions& o) {
  return {check_property_A(k, s, o), check_property_B(k, s, o)};
}

// After-state of a violating (state, op) pair.
struct Violation {
  int k_after = 0;
  SchemeSet after;
  Checked checked;
};

std::optional<Violation> geometric_violation(const GrowthTrace& trace, const AttachmentOp& op,
                                             const PropertyOptions& o) {
  try {
    const GrownState g = replay_growth(trace);
    if (op.interval >= g.state.k() || !attachment_allowed(g.state.k(), op.n)) return std::nullopt;
    if (!check_both(g.state.k(), g.pset.schemes(), o).ok()) return std::nullopt;
    const PrimitiveSet next = update_on_attach(g.pset, op.interval, op.n);
    Checked after = check_both(next.k(), next.schemes(), o);
    if (after.ok()) return std::nullopt;
    return Violation{next.k(), next.schemes(), std::move(after)};
  } catch (const IllegalAttachment&) {
    return std::nullopt;
  } catch (const ScaleLimitError&) {
    return std::nullopt;
  }
}

std::optional<Violation> abstract_violation(int k, const SchemeSet& s, const AttachmentOp& op,
                                            const PropertyOptions& o) {
  try {
    if (s.empty() || !check_both(k, s, o).ok()) return std::nullopt;
    const PrimitiveSet next = update_on_attach(PrimitiveSet::from_schemes(k, s), op.interval, op.n);
    Checked after = check_both(next.k(), next.schemes(), o);
    if (after.ok()) return std::nullopt;
    return Violation{next.k(), next.schemes(), std::move(after)};
  } catch (const ScaleLimitError&) {
    return std::nullopt;
  }
}

CounterexampleReport certify(TrialState state, std::vector<AttachmentOp> ops, const Violation& v,
                             std::uint64_t seed, std::uint64_t index, int steps, const HarnessOptions& o) {
  CounterexampleReport r;
  r.state = std::move(state);
  r.ops = std::move(ops);
  r.k_after = v.k_after;
  r.schemes_after = v.after;
  r.failed_A = !v.checked.a.holds;
  r.failed_B = !v.checked.b.holds;
  r.trail = r.failed_A ? v.checked.a.violating_trail : v.checked.b.violating_trail;
  r.rng_seed = seed;
  r.state_index = index;
  r.shrink_steps = steps;
  r.caps = caps_json(o);
  if (v.k_after <= kNaiveMaxK && v.after.size() <= kNaiveMaxSchemes) {
    const auto na = check_naive(v.k_after, v.after, Property::A, o.properties);
    const auto nb = check_naive(v.k_after, v.after, Property::B, o.properties);
    r.revalidated = (r.failed_A || r.failed_B) && (!r.failed_A || !na.holds) && (!r.failed_B || !nb.holds) &&
                    (r.failed_A || na.holds) && (r.failed_B || nb.holds);
  }
  return r;
}

// Greedy shrink of a geometric counterexample: shorter traces first, then a
// smaller polygon, then a smaller n. Every accepted candidate still violates.
CounterexampleReport shrink_geometric(GrowthTrace trace, AttachmentOp op, Violation v, bool shrink_n,
                                      std::uint64_t seed, std::uint64_t index, const HarnessOptions& o) {
  int steps = 0;
  auto attempt = [&](const GrowthTrace& t, int n, int preferred) -> bool {
    int k = 0;
    try {
      k = replay_growth(t).state.k();
    } catch (const IllegalAttachment&) {
      return false;
    }
    for (int d = 0; d < k; ++d) {
      const AttachmentOp cand{(preferred + d) % k, n, 0};
      if (auto w = geometric_violation(t, cand, o.properties)) {
        trace = t;
        op = cand;
        v = std::move(*w);
        ++steps;
        return true;
      }
    }
    return false;
  };
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t j = trace.ops.size(); j-- > 0 && !improved;) {
      GrowthTrace t = trace;
      t.ops.erase(t.ops.begin() + static_cast<std::ptrdiff_t>(j));
      improved = attempt(t, op.n, op.interval);
    }
    if (!improved && trace.ops.empty() && trace.polygon_k > 2) {
      GrowthTrace t = trace;
      --t.polygon_k;
      improved = attempt(t, op.n, op.interval);
    }
    for (int n = op.n - 1; shrink_n && !improved && n >= 0; --n) improved = attempt(trace, n, op.interval);
  }
  return certify(TrialState{trace, replay_growth(trace).state.k(), {}}, {op}, v, seed, index, steps, o);
}

// Greedy single-scheme removal keeping the before-state valid and the
// after-state violating.
CounterexampleReport shrink_abstract(int k, SchemeSet s, AttachmentOp op, Violation v, std::uint64_t seed,
                                     std::uint64_t index, const HarnessOptions& o) {
  int steps = 0;
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t j = 0; j < s.size() && !improved; ++j) {
      SchemeSet t = s;
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(j));
      if (auto w = abstract_violation(k, t, op, o.properties)) {
        s = std::move(t);
        v = std::move(*w);
        ++steps;
        improved = true;
      }
    }
  }
  return certify(TrialState{std::nullopt, k, s}, {op}, v, seed, index, steps, o);
}

// A report is emitted only once check_naive reproduces it; otherwise the
// trial stays unconfirmed and keeps the memoized after-checks.
void settle(Trial& t, CounterexampleReport r) {
  if (r.revalidated) {
    t.verdict = Verdict::Counterexample;
    t.counterexample = std::move(r);
    return;
  }
  t.verdict = Verdict::Unconfirmed;
  t.note = "violation could not be shrunk within naive caps (k=" + std::to_string(r.k_after) +
           ", schemes=" + std::to_string(r.schemes_after.size()) + ")";
}

Trial geometric_trial(const std::string& experiment, std::uint64_t seed, std::uint64_t index,
                      const GrowthTrace& trace, const GrownState& g, const Checked& before,
                      const AttachmentOp& op, const HarnessOptions& o) {
  Trial t;
  t.experiment = experiment;
  t.state_index = index;
  t.state.trace = trace;
  t.state.k = g.state.k();
  t.ops = {op};
  t.before_A = before.a;
  t.before_B = before.b;
  try {
    const PrimitiveSet next = update_on_attach(g.pset, g.state, op);
    if (o.cross_check_oracle) {
      const BoundaryState after_state = attach(g.state, op);
      if (after_state.interior().size() <= kOracleMaxFaces && after_state.k() <= kOracleMaxIntervals) {
        t.oracle_agrees = primitive_set_reference(after_state).schemes() == next.schemes();
      }
    }
    Checked after = check_both(next.k(), next.schemes(), o.properties);
    t.after_A = after.a;
    t.after_B = after.b;
    if (after.ok()) {
      t.verdict = Verdict::Consistent;
    } else {
      settle(t, shrink_geometric(trace, op, Violation{next.k(), next.schemes(), std::move(after)},
                                 experiment == "theorem3", seed, index, o));
    }
  } catch (const ScaleLimitError& e) {
    t.verdict = Verdict::Skipped;
    t.note = e.what();
  }
  return t;
}

// Start state, its before-check, and the trials for every op in `ns`.
void run_state(const std::string& experiment, std::uint64_t seed, std::uint64_t index, const std::vector<int>& ns,
               const HarnessOptions& o, std::vector<Trial>& out) {
  const GrowthTrace trace = sample_state(seed, index, o);
  const GrownState g = replay_growth(trace);
  Trial head;
  head.experiment = experiment;
  head.state_index = index;
  head.state.trace = trace;
  head.state.k = g.state.k();
  Checked before;
  try {
    before = check_both(g.state.k(), g.pset.schemes(), o.properties);
  } catch (const ScaleLimitError& e) {
    head.verdict = Verdict::Skipped;
    head.note = std::string("before-state: ") + e.what();
    out.push_back(std::move(head));
    return;
  }
  if (!before.ok()) {
    head.verdict = Verdict::Discarded;
    head.before_A = before.a;
    head.before_B = before.b;
    head.note = "before-state fails A or B";
    out.push_back(std::move(head));
    return;
  }
  for (int i = 0; i < g.state.k(); ++i) {
    for (int n : ns) {
      if (!attachment_allowed(g.state.k(), n)) continue;
      out.push_back(geometric_trial(experiment, seed, index, trace, g, before, {i, n, 0}, o));
    }
  }
}

std::vector<int> n_range(int lo, int hi) {
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  return ns;
}

}  // namespace

nlohmann::json TrialState::to_json() const {
  if (trace) return {{"trace", trace->to_json()}, {"k", k}};
  return {{"k", k}, {"schemes", schemes_json(k, schemes)}};
}

nlohmann::json CounterexampleReport::to_json() const {
  nlohmann::json j = {{"state", state.to_json()},
                      {"ops", ops_json(ops)},
                      {"k_after", k_after},
                      {"schemes_after", schemes_json(k_after, schemes_after)},
                      {"failed_A", failed_A},
                      {"failed_B", failed_B},
                      {"revalidated", revalidated},
                      {"rng_seed", rng_seed},
                      {"state_index", state_index},
                      {"shrink_steps", shrink_steps},
                      {"caps", caps}};
  j["trail"] = trail ? trail_to_json(*trail) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json Trial::to_json() const {
  nlohmann::json j = {{"experiment", experiment},
                      {"state_index", state_index},
                      {"state", state.to_json()},
                      {"ops", ops_json(ops)},
                      {"verdict", to_string(verdict)},
                      {"before", {{"A", brief(before_A)}, {"B", brief(before_B)}}},
                      {"after", {{"A", brief(after_A)}, {"B", brief(after_B)}}}};
  if (!note.empty()) j["note"] = note;
  j["oracle_agrees"] = oracle_agrees ? nlohmann::json(*oracle_agrees) : nlohmann::json(nullptr);
  if (counterexample) j["counterexample"] = counterexample->to_json();
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

nlohmann::json TrialSummary::to_json() const {
  return {{"consistent", consistent},         {"counterexample", counterexample},
          {"skipped", skipped},               {"discarded", discarded},
          {"unconfirmed", unconfirmed},
          {"oracle_checked", oracle_checked}, {"oracle_mismatches", oracle_mismatches}};
}

TrialSummary summarize(const std::vector<Trial>& trials) {
  TrialSummary s;
  for (const auto& t : trials) {
    switch (t.verdict) {
      case Verdict::Consistent: ++s.consistent; break;
      case Verdict::Counterexample: ++s.counterexample; break;
      case Verdict::Skipped: ++s.skipped; break;
      case Verdict::Discarded: ++s.discarded; break;
      case Verdict::Unconfirmed: ++s.unconfirmed; break;
    }
    if (t.oracle_agrees) {
      ++s.oracle_checked;
      if (!*t.oracle_agrees) ++s.oracle_mismatches;
    }
  }
  return s;
}

GrowthTrace sample_state(std::uint64_t seed, std::uint64_t index, const HarnessOptions& options) {
  auto rng = indexed_rng(seed, index);
  const int k = std::uniform_int_distribution<int>(2, options.max_polygon)(rng);
  return random_growth(rng, k, options.growth);
}

std::vector<Trial> verify_theorem1(int k_max, const HarnessOptions& options) {
  if (k_max > options.properties.max_k) throw ScaleLimitError("state space too large: k_max exceeds cap");
  std::vector<Trial> out;
  for (int k = 2; k <= k_max; ++k) {
    const GrowthTrace trace{k, 0, {}};
    const GrownState g = replay_growth(trace);
    Trial t;
    t.experiment = "theorem1";
    t.state_index = static_cast<std::uint64_t>(k);
    t.state.trace = trace;
    t.state.k = k;
    try {
      Checked c = check_both(k, g.pset.schemes(), options.properties);
      t.before_A = c.a;
      t.before_B = c.b;
      const bool seed_outer = c.b.outer_colors.contains(trace.seed_color);
      t.verdict = c.ok() && seed_outer ? Verdict::Consistent : Verdict::Counterexample;
      if (c.ok() && !seed_outer) t.note = "outer colors exclude the polygon color";
      if (!c.ok()) {
        settle(t, certify(t.state, {}, Violation{k, g.pset.schemes(), std::move(c)}, 0, t.state_index, 0, options));
      }
    } catch (const ScaleLimitError& e) {
      t.verdict = Verdict::Skipped;
      t.note = e.what();
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Trial> verify_theorem2(std::size_t states, std::uint64_t seed, const HarnessOptions& options) {
  std::vector<Trial> out;
  for (std::uint64_t idx = 0; idx < states; ++idx) run_state("theorem2", seed, idx, {2}, options, out);
  return out;
}

std::vector<Trial> verify_theorem3(int n_max, std::size_t states, std::uint64_t seed, const HarnessOptions& options) {
  if (n_max < 2) throw InputError("verify_theorem3 needs n_max >= 2");
  std::vector<Trial> out;
  const auto ns = n_range(0, n_max);
  for (std::uint64_t idx = 0; idx < states; ++idx) run_state("theorem3", seed, idx, ns, options, out);
  return out;
}

SchemeSet sample_abstract(int k, std::uint64_t seed, std::uint64_t index) {
  if (index == 0) return polygon_primitive_set(k, 0).schemes();
  auto rng = indexed_rng(seed, index);
  SchemeSet all = cycle_colorings(k, 0);
  const std::size_t cap = std::min<std::size_t>(32, all.size());
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Trial> fuzz_abstract(int k, std::size_t samples, std::uint64_t seed, const HarnessOptions& options) {
  if (k < 2 || k > kNaiveMaxK) throw InputError("fuzz_abstract needs 2 <= k <= 5");
  std::vector<Trial> out;
  for (std::uint64_t idx = 0; idx < samples; ++idx) {
    const SchemeSet s = sample_abstract(k, seed, idx);
    Trial head;
    head.experiment = "abstract";
    head.state_index = idx;
    head.state = TrialState{std::nullopt, k, s};
    const Checked before = check_both(k, s, options.properties);
    if (!before.ok()) {
      head.verdict = Verdict::Discarded;
      head.before_A = before.a;
      head.before_B = before.b;
      head.note = "before-state fails A or B";
      out.push_back(std::move(head));
      continue;
    }
    std::vector<int> ns{2};
    if (k + 1 <= kNaiveMaxK) ns.push_back(3);
    for (int i = 0; i < k; ++i) {
      for (int n : ns) {
        Trial t = head;
        const AttachmentOp op{i, n, 0};
        t.ops = {op};
        t.before_A = before.a;
        t.before_B = before.b;
        const PrimitiveSet next = update_on_attach(PrimitiveSet::from_schemes(k, s), i, n);
        Checked after = check_both(next.k(), next.schemes(), options.properties);
        t.after_A = after.a;
        t.after_B = after.b;
        if (after.ok()) {
          t.verdict = Verdict::Consistent;
        } else {
          settle(t, shrink_abstract(k, s, op, Violation{next.k(), next.schemes(), std::move(after)}, seed, idx,
                                    options));
        }
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

Trial replay_trial(const Trial& trial, std::uint64_t seed, const HarnessOptions& options) {
  if (trial.ops.size() != 1) throw InputError("replay needs a single-op trial");
  const AttachmentOp op = trial.ops.front();
  if (trial.experiment == "abstract") {
    const SchemeSet s = sample_abstract(trial.state.k, seed, trial.state_index);
    if (s != trial.state.schemes) throw InputError("replayed abstract state differs from the recorded one");
    Trial t = trial;
    t.counterexample.reset();
    const Checked before = check_both(t.state.k, s, options.properties);
    const PrimitiveSet next = update_on_attach(PrimitiveSet::from_schemes(t.state.k, s), op.interval, op.n);
    Checked after = check_both(next.k(), next.schemes(), options.properties);
    t.before_A = before.a;
    t.before_B = before.b;
    t.after_A = after.a;
    t.after_B = after.b;
    t.verdict = Verdict::Consistent;
    if (!after.ok()) {
      settle(t, shrink_abstract(t.state.k, s, op, Violation{next.k(), next.schemes(), std::move(after)}, seed,
                                t.state_index, options));
    }
    return t;
  }
  if (trial.experiment != "theorem2" && trial.experiment != "theorem3") {
    throw InputError("replay supports theorem2, theorem3 and abstract trials");
  }
  const GrowthTrace trace = sample_state(seed, trial.state_index, options);
  if (!trial.state.trace || trace != *trial.state.trace) {
    throw InputError("replayed state differs from the recorded one");
  }
  const GrownState g = replay_growth(trace);
  const Checked before = check_both(g.state.k(), g.pset.schemes(), options.properties);
  return geometric_trial(trial.experiment, seed, trial.state_index, trace, g, before, op, options);
}

namespace {

int interval_with_arc(const BoundaryState& s, const std::vector<VertexId>& arc) {
  for (const auto& iv : s.intervals())
    if (iv.arc == arc) return iv.index;
  return -1;
}

std::vector<VertexId> canonical_cycle(const Walk& w) {
  auto it = std::min_element(w.begin(), w.end());
  std::vector<VertexId> out(it, w.end());
  out.insert(out.end(), w.begin(), it);
  return out;
}

std::map<FaceId, std::vector<VertexId>> canonical_faces(const BoundaryState& s) {
  std::map<FaceId, std::vector<VertexId>> out;
  for (const auto& [f, w] : s.walks()) out[f] = canonical_cycle(w);
  return out;
}

// Interval shift s with interval j of `a` equal to interval j + s of `b`,
// when the rings agree up to rotation.
std::optional<int> ring_shift(const BoundaryState& a, const BoundaryState& b) {
  const auto& ra = a.ring();
  const auto& rb = b.ring();
  if (ra.size() != rb.size() || a.k() != b.k()) return std::nullopt;
  const std::size_t n = ra.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool same = true;
    for (std::size_t j = 0; j < n && same; ++j) {
      const auto& x = ra[j];
      const auto& y = rb[(j + r) % n];
      same = x.id == y.id && x.outward == y.outward && a.ring_faces()[j] == b.ring_faces()[(j + r) % n];
    }
    if (!same) continue;
    if (a.k() == 1) return 0;
    const auto ia = a.intervals();
    const auto ib = b.intervals();
    for (const auto& iv : ib)
      if (iv.arc == ia.front().arc) return iv.index;
    return std::nullopt;
  }
  return std::nullopt;
}

struct Order {
  BoundaryState state;
  PrimitiveSet pset;
};

std::optional<Order> run_order(const GrownState& g, int first_iv, const FaceId& first_face,
                               const std::vector<VertexId>& first_pts, int first_n,
                               const std::vector<VertexId>& second_arc, const FaceId& second_face,
                               const std::vector<VertexId>& second_pts) {
  const int k = g.state.k();
  if (!attachment_allowed(k, first_n)) return std::nullopt;
  Order o{attach_region(g.state, first_iv, first_face, first_pts, 0),
          update_on_attach(g.pset, first_iv, first_n)};
  const int second_iv = interval_with_arc(o.state, second_arc);
  const int second_n = static_cast<int>(second_pts.size());
  if (second_iv < 0) throw std::logic_error("decomposition: expected interval missing");
  if (!attachment_allowed(o.state.k(), second_n)) return std::nullopt;
  o.pset = update_on_attach(o.pset, second_iv, second_n);
  o.state = attach_region(o.state, second_iv, second_face, second_pts, 0);
  return o;
}

}  // namespace

std::vector<Trial> check_decomposition_equivalences(std::size_t states, std::uint64_t seed,
                                                    const HarnessOptions& options) {
  std::vector<Trial> out;
  for (std::uint64_t idx = 0; idx < states; ++idx) {
    const GrowthTrace trace = sample_state(seed, idx, options);
    const GrownState g = replay_growth(trace);
    auto rng = indexed_rng(seed ^ 0x5eedULL, idx);
    const int k = g.state.k();
    Trial t;
    t.experiment = "decomposition";
    t.state_index = idx;
    t.state.trace = trace;
    t.state.k = k;
    if (k < 3) {
      t.verdict = Verdict::Skipped;
      t.note = "needs at least three intervals";
      out.push_back(std::move(t));
      continue;
    }
    const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    const int v = std::uniform_int_distribution<int>(0, 1)(rng);  // 0: 0-point variant, 1: 1-point variant
    const auto ivs = g.state.intervals();
    const auto& ab = ivs[static_cast<std::size_t>((i + k - 1) % k)].arc;
    const auto& bc = ivs[static_cast<std::size_t>(i)].arc;
    std::vector<VertexId> w;
    for (int j = 1; j <= m; ++j) w.push_back("d" + std::to_string(j));
    const VertexId x = "dx";

    // Order 1: R1 on BC with w1..wm, then R0 on A..B..w1 with v new points.
    std::vector<VertexId> el = ab;
    el.push_back(w.front());
    std::vector<VertexId> r0_pts1;
    if (v == 1) r0_pts1.push_back(x);
    // Order 2: R0 on AB with (x,) w1, then R1 on w1..B..C with w2..wm.
    std::vector<VertexId> r0_pts2 = r0_pts1;
    r0_pts2.push_back(w.front());
    std::vector<VertexId> dc{w.front()};
    dc.insert(dc.end(), bc.begin(), bc.end());
    const std::vector<VertexId> rest(w.begin() + 1, w.end());

    t.ops = {{i, m, 0}, {0, v, 0}};
    t.detail = {{"interval", i}, {"m", m}, {"variant", v == 0 ? "zero-point" : "one-point"}};
    try {
      const auto o1 = run_order(g, i, "R1", w, m, el, "R0", r0_pts1);
      const auto o2 = run_order(g, (i + k - 1) % k, "R0", r0_pts2, v + 1, dc, "R1", rest);
      if (!o1 || !o2) {
        t.verdict = Verdict::Skipped;
        t.note = "an attachment in one order is not admissible at its k";
        out.push_back(std::move(t));
        continue;
      }
      const bool faces_equal = canonical_faces(o1->state) == canonical_faces(o2->state);
      const auto shift = ring_shift(o1->state, o2->state);
      bool schemes_equal = false;
      if (shift) {
        SchemeSet rotated;
        for (auto y : o2->pset.schemes()) rotated.push_back(rotate_scheme(y, o2->pset.k(), *shift));
        std::sort(rotated.begin(), rotated.end());
        schemes_equal = rotated == o1->pset.schemes();
      }
      t.detail["faces_equal"] = faces_equal;
      t.detail["ring_equal"] = shift.has_value();
      t.detail["schemes_equal"] = schemes_equal;
      t.detail["k_after"] = o1->state.k();
      t.detail["schemes"] = o1->pset.size();
      if (faces_equal && shift && schemes_equal) {
        t.verdict = Verdict::Consistent;
      } else {
        t.verdict = Verdict::Counterexample;
        t.note = "construction orders disagree";
      }
    } catch (const ScaleLimitError& e) {
      t.verdict = Verdict::Skipped;
      t.note = e.what();
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace fourcolor
