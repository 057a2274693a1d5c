#include "fourcolor/properties.hpp"

#include <deque>
#include <functional>
#include <unordered_map>

#include "fourcolor/errors.hpp"

namespace fourcolor {

std::string to_string(const Move& m) {
  return std::string(m.n == 0 ? "zero-point@" : "one-point@") + std::to_string(m.interval);
}

nlohmann::json trail_to_json(const Trail& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : t) arr.push_back({{"interval", m.interval}, {"n", m.n}});
  return arr;
}

Trail trail_from_json(const nlohmann::json& j) {
  Trail t;
  for (const auto& m : j) t.push_back({m.at("interval").get<int>(), m.at("n").get<int>()});
  return t;
}

nlohmann::json PropertyReport::to_json() const {
  nlohmann::json j = {{"property", property == Property::A ? "A" : "B"},
                      {"holds", holds},
                      {"states_explored", states_explored},
                      {"memo_hits", memo_hits}};
  j["violating_trail"] = violating_trail ? trail_to_json(*violating_trail) : nlohmann::json(nullptr);
  if (property == Property::B) {
    j["outer_colors"] = nlohmann::json::array();
    for (auto c : outer_colors) j["outer_colors"].push_back(static_cast<int>(c));
    nlohmann::json ct = nlohmann::json::object();
    for (int c = 0; c < kNumColors; ++c)
      if (color_trails[static_cast<std::size_t>(c)]) ct[std::to_string(c)] = trail_to_json(*color_trails[static_cast<std::size_t>(c)]);
    j["color_trails"] = ct;
  }
  return j;
}

std::pair<int, SchemeSet> apply_move(int k, const SchemeSet& schemes, const Move& m) {
  if (m.n == 0) return {k - 2, filter_zero(schemes, k, m.interval)};
  return {k - 1, filter_one(schemes, k, m.interval)};
}

std::pair<int, SchemeSet> replay_trail(int k, SchemeSet schemes, const Trail& trail) {
  for (const auto& m : trail) {
    if (k < 4) break;
    std::tie(k, schemes) = apply_move(k, schemes, m);
  }
  return {k, std::move(schemes)};
}

unsigned avoid_mask(int k, const SchemeSet& schemes, OuterColorReading reading) {
  constexpr unsigned kAll = (1u << kNumColors) - 1;
  if (schemes.empty()) return 0;
  if (reading == OuterColorReading::OneScheme) {
    unsigned mask = 0;
    for (auto x : schemes) {
      unsigned used = 0;
      for (int j = 0; j < k; ++j) used |= 1u << scheme_color(x, j);
      mask |= ~used & kAll;
      if (mask == kAll) break;
    }
    return mask;
  }
  unsigned mask = kAll;
  for (int j = 0; j < k; ++j) {
    unsigned at_j = 0;
    for (auto x : schemes) at_j |= 1u << scheme_color(x, j);
    if ((at_j & (at_j - 1)) == 0) mask &= ~at_j;
  }
  return mask;
}

std::vector<Move> moves_at(int k) {
  std::vector<Move> out;
  if (k < 4) return out;
  for (int i = 0; i < k; ++i) {
    out.push_back({i, 0});
    out.push_back({i, 1});
  }
  return out;
}

namespace {

std::string state_key(int k, const SchemeSet& s) {
  std::string key(1, static_cast<char>(k));
  key.append(reinterpret_cast<const char*>(s.data()), s.size() * sizeof(PackedScheme));
  return key;
}

// Everything reachable from a state: whether every reachable set is
// nonempty, and which colors stay avoidable in every reachable set.
struct Summary {
  bool all_nonempty = true;
  unsigned good_colors = 0;
};

class Explorer {
 public:
  Explorer(const PropertyOptions& options, Property target) : options_(options), target_(target) {}

  Summary explore(int k, const SchemeSet& s) {
    if (s.empty()) return {false, 0};
    const std::string key = state_key(k, s);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
    if (memo_.size() >= options_.max_states) {
      throw ScaleLimitError("state space too large: explored " + std::to_string(memo_.size()) +
                            " states, " + std::to_string(hits_) + " memo hits");
    }
    Summary sum{true, avoid_mask(k, s, options_.reading)};
    for (const auto& m : moves_at(k)) {
      if (target_ == Property::A && !sum.all_nonempty) break;
      if (target_ == Property::B && sum.good_colors == 0) break;
      auto [k2, child] = apply_move(k, s, m);
      if (child.empty() && options_.quantification == Quantification::Pruned) continue;
      const Summary c = explore(k2, child);
      sum.all_nonempty = sum.all_nonempty && c.all_nonempty;
      sum.good_colors &= c.good_colors;
    }
    memo_.emplace(key, sum);
    return sum;
  }

  std::uint64_t states() const { return memo_.size(); }
  std::uint64_t hits() const { return hits_; }

 private:
  PropertyOptions options_;
  Property target_;
  std::unordered_map<std::string, Summary> memo_;
  std::uint64_t hits_ = 0;
};

// Breadth-first search for the shortest trail to a state satisfying `bad`.
std::optional<Trail> shortest_trail(int k, const SchemeSet& root, const PropertyOptions& options,
                                    const std::function<bool(int, const SchemeSet&)>& bad) {
  struct Node {
    int k;
    SchemeSet s;
    Trail trail;
  };
  std::deque<Node> queue;
  std::unordered_map<std::string, bool> visited;
  queue.push_back({k, root, {}});
  visited[state_key(k, root)] = true;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (bad(node.k, node.s)) return node.trail;
    if (node.s.empty()) continue;
    for (const auto& m : moves_at(node.k)) {
      auto [k2, child] = apply_move(node.k, node.s, m);
      if (child.empty() && options.quantification == Quantification::Pruned) continue;
      auto key = state_key(k2, child);
      if (!visited.emplace(std::move(key), true).second) continue;
      if (visited.size() > options.max_states) throw ScaleLimitError("state space too large while searching for a trail");
      Trail t = node.trail;
      t.push_back(m);
      queue.push_back({k2, std::move(child), std::move(t)});
    }
  }
  return std::nullopt;
}

void check_scale(int k, const PropertyOptions& options) {
  if (k < 1) throw InputError("property checks need k >= 1");
  if (k > options.max_k) throw ScaleLimitError("state space too large: k=" + std::to_string(k) + " exceeds cap");
}

bool lacks_color(int k, const SchemeSet& s, Color d, OuterColorReading reading) {
  return (avoid_mask(k, s, reading) & (1u << d)) == 0;
}

}  // namespace

PropertyReport check_property_A(int k, const SchemeSet& schemes, const PropertyOptions& options) {
  check_scale(k, options);
  Explorer ex(options, Property::A);
  const Summary sum = ex.explore(k, schemes);
  PropertyReport r;
  r.property = Property::A;
  r.holds = sum.all_nonempty;
  r.states_explored = ex.states();
  r.memo_hits = ex.hits();
  if (!r.holds) {
    r.violating_trail = shortest_trail(k, schemes, options, [](int, const SchemeSet& s) { return s.empty(); });
  }
  return r;
}

PropertyReport check_property_B(int k, const SchemeSet& schemes, const PropertyOptions& options) {
  check_scale(k, options);
  Explorer ex(options, Property::B);
  const Summary sum = ex.explore(k, schemes);
  PropertyReport r;
  r.property = Property::B;
  for (Color d = 0; d < kNumColors; ++d)
    if (sum.good_colors & (1u << d)) r.outer_colors.insert(d);
  r.holds = !r.outer_colors.empty();
  r.states_explored = ex.states();
  r.memo_hits = ex.hits();
  for (Color d = 0; d < kNumColors; ++d) {
    if (r.outer_colors.contains(d)) continue;
    r.color_trails[d] = shortest_trail(k, schemes, options, [&](int kk, const SchemeSet& s) {
      return lacks_color(kk, s, d, options.reading);
    });
  }
  if (!r.holds) {
    for (const auto& t : r.color_trails) {
      if (t && (!r.violating_trail || t->size() < r.violating_trail->size())) r.violating_trail = t;
    }
  }
  return r;
}

PropertyReport check_naive(int k, const SchemeSet& schemes, Property property, const PropertyOptions& options) {
  if (k > kNaiveMaxK || schemes.size() > kNaiveMaxSchemes) {
    throw ScaleLimitError("naive checker limited to k <= 5 and at most 64 schemes");
  }
  PropertyReport r;
  r.property = property;
  bool all_nonempty = true;
  unsigned good = (1u << kNumColors) - 1;
  std::array<std::optional<Trail>, kNumColors> color_trails;
  std::optional<Trail> empty_trail;
  Trail trail;

  std::function<void(int, const SchemeSet&)> walk = [&](int kk, const SchemeSet& s) {
    ++r.states_explored;
    if (s.empty()) {
      all_nonempty = false;
      if (!empty_trail) empty_trail = trail;
    }
    const unsigned mask = avoid_mask(kk, s, options.reading);
    for (Color d = 0; d < kNumColors; ++d) {
      if (!(mask & (1u << d)) && !color_trails[d]) color_trails[d] = trail;
    }
    good &= mask;
    if (s.empty()) return;
    for (const auto& m : moves_at(kk)) {
      auto [k2, child] = apply_move(kk, s, m);
      if (child.empty() && options.quantification == Quantification::Pruned) continue;
      trail.push_back(m);
      walk(k2, child);
      trail.pop_back();
    }
  };
  walk(k, schemes);

  if (property == Property::A) {
    r.holds = all_nonempty;
    r.violating_trail = empty_trail;
  } else {
    for (Color d = 0; d < kNumColors; ++d)
      if (good & (1u << d)) r.outer_colors.insert(d);
    r.holds = !r.outer_colors.empty();
    r.color_trails = color_trails;
    if (!r.holds) {
      for (const auto& t : color_trails)
        if (t && (!r.violating_trail || t->size() < r.violating_trail->size())) r.violating_trail = t;
    }
  }
  return r;
}

}  // namespace fourcolor
