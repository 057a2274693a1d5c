#include "fourcolor/growth.hpp"

#include <algorithm>

#include "fourcolor/errors.hpp"

namespace fourcolor {

nlohmann::json GrowthTrace::to_json() const {
  nlohmann::json ops_json = nlohmann::json::array();
  for (const auto& op : ops) ops_json.push_back({{"interval", op.interval}, {"n", op.n}, {"color", op.color}});
  return {{"polygon", polygon_k}, {"seed_color", seed_color}, {"ops", ops_json}};
}

GrowthTrace GrowthTrace::from_json(const nlohmann::json& j) {
  GrowthTrace t;
  try {
    t.polygon_k = j.at("polygon").get<int>();
    t.seed_color = static_cast<Color>(j.value("seed_color", 0));
    if (j.contains("ops")) {
      for (const auto& op : j.at("ops")) {
        t.ops.push_back({op.at("interval").get<int>(), op.at("n").get<int>(),
                         static_cast<Color>(op.value("color", 0))});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad growth trace: ") + e.what());
  }
  if (t.polygon_k < 1 || t.seed_color >= kNumColors) throw InputError("bad growth trace: polygon or seed color");
  return t;
}

GrownState replay_growth(const GrowthTrace& trace) {
  GrownState g{BoundaryState::polygon(trace.polygon_k, trace.seed_color), PrimitiveSet{}};
  g.pset = initial_primitive_set(g.state);
  for (const auto& op : trace.ops) {
    if (op.interval < 0 || op.interval >= g.state.k() || !attachment_allowed(g.state.k(), op.n)) {
      throw IllegalAttachment("illegal attachment at k=" + std::to_string(g.state.k()));
    }
    g.pset = update_on_attach(g.pset, g.state, op);
    g.state = attach(g.state, op);
  }
  return g;
}

std::mt19937_64 indexed_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

GrowthTrace random_growth(std::mt19937_64& rng, int polygon_k, const GrowthCaps& caps) {
  GrowthTrace trace{polygon_k, 0, {}};
  GrownState g = replay_growth(trace);
  const int steps = std::uniform_int_distribution<int>(0, caps.max_ops)(rng);
  for (int step = 0; step < steps; ++step) {
    const int k = g.state.k();
    if (k < 2 || g.state.interior().size() >= caps.max_interior) break;
    std::vector<std::pair<int, int>> options;
    for (int i = 0; i < k; ++i)
      for (int n = 0; n <= caps.max_n; ++n)
        if (attachment_allowed(k, n) && interval_count_after(k, n) <= caps.max_k) options.emplace_back(i, n);
    std::shuffle(options.begin(), options.end(), rng);
    bool grown = false;
    for (auto [i, n] : options) {
      PrimitiveSet next = update_on_attach(g.pset, i, n);
      if (next.empty()) continue;
      const AttachmentOp op{i, n, next.witness(0).back()};
      g.state = attach(g.state, op);
      g.pset = std::move(next);
      trace.ops.push_back(op);
      grown = true;
      break;
    }
    if (!grown) break;
  }
  return trace;
}

}  // namespace fourcolor
