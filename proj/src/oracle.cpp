#include "fourcolor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "fourcolor/errors.hpp"

namespace fourcolor {

namespace {

struct IndexedGraph {
  std::vector<FaceId> names;
  std::vector<std::vector<std::size_t>> nb;
};

IndexedGraph index_graph(const DualGraph& g) {
  IndexedGraph out;
  out.names = g.nodes;
  std::sort(out.names.begin(), out.names.end());
  std::map<FaceId, std::size_t> idx;
  for (std::size_t i = 0; i < out.names.size(); ++i) idx[out.names[i]] = i;
  out.nb.resize(out.names.size());
  for (const auto& [a, b] : g.edges) {
    out.nb[idx.at(a)].push_back(idx.at(b));
    out.nb[idx.at(b)].push_back(idx.at(a));
  }
  return out;
}

}  // namespace

std::optional<Coloring> four_color_bruteforce(const DualGraph& adjacency, const Coloring& fixed) {
  const IndexedGraph g = index_graph(adjacency);
  const std::size_t n = g.names.size();
  std::vector<int> col(n, -1);
  std::vector<bool> pinned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = fixed.find(g.names[i]);
    if (it != fixed.end()) {
      col[i] = it->second;
      pinned[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!pinned[i]) continue;
    for (auto j : g.nb[i])
      if (pinned[j] && col[j] == col[i]) return std::nullopt;
  }
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    if (pinned[i]) return rec(i + 1);
    for (int c = 0; c < kNumColors; ++c) {
      bool ok = true;
      for (auto j : g.nb[i]) {
        if (col[j] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      col[i] = c;
      if (rec(i + 1)) return true;
    }
    col[i] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  Coloring out;
  for (std::size_t i = 0; i < n; ++i) out[g.names[i]] = static_cast<Color>(col[i]);
  return out;
}

ColoringEnumeration count_colorings(const DualGraph& adjacency, int num_colors) {
  if (num_colors < 1 || num_colors > kNumColors) throw InputError("num_colors must be in 1..4");
  const IndexedGraph g = index_graph(adjacency);
  const std::size_t n = g.names.size();
  if (n > 16) throw ScaleLimitError("scale limit: count_colorings supports at most 16 faces");
  ColoringEnumeration result;
  std::vector<int> col(n, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (result.count++ == 0) {
        Coloring c;
        for (std::size_t j = 0; j < n; ++j) c[g.names[j]] = static_cast<Color>(col[j]);
        result.sample = std::move(c);
      }
      return;
    }
    for (int c = 0; c < num_colors; ++c) {
      bool ok = true;
      for (auto j : g.nb[i]) {
        if (j < i && col[j] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      col[i] = c;
      rec(i + 1);
    }
    col[i] = -1;
  };
  rec(0);
  return result;
}

PrimitiveSet primitive_set_reference(const BoundaryState& state, const ReferenceOptions& options) {
  const auto& faces = state.interior();
  const int k = state.k();
  if (faces.size() > options.max_faces) throw ScaleLimitError("scale limit: too many interior faces for the oracle");
  if (k > options.max_intervals) throw ScaleLimitError("scale limit: too many intervals for the oracle");

  std::map<FaceId, std::size_t> idx;
  for (std::size_t i = 0; i < faces.size(); ++i) idx[faces[i]] = i;

  // Face adjacency from the fragment's shared edges; with parallel edges the
  // pairing of sides is ambiguous, so use the adjacency recorded at attach time.
  const PlanarMap frag = state.fragment();
  const std::set<std::pair<FaceId, FaceId>> adj =
      frag.has_parallel_edges() ? state.adjacency() : dual(frag).edges;
  std::vector<std::vector<std::size_t>> nb(faces.size());
  for (const auto& [a, b] : adj) {
    nb[idx.at(a)].push_back(idx.at(b));
    nb[idx.at(b)].push_back(idx.at(a));
  }

  const auto iv_faces = state.interval_faces();
  std::vector<std::vector<std::size_t>> iv_idx;
  for (const auto& fs : iv_faces) {
    std::vector<std::size_t> v;
    for (const auto& f : fs) v.push_back(idx.at(f));
    iv_idx.push_back(std::move(v));
  }

  // Distinct per-interval forbidden-color signatures, each with the first
  // interior coloring that produced it.
  std::vector<std::vector<unsigned>> signatures;
  std::vector<Witness> sig_witness;
  std::map<std::vector<unsigned>, std::size_t> seen;
  std::vector<Color> col(faces.size(), 0);
  const Color seed_color = state.seed_color();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == faces.size()) {
      std::vector<unsigned> sig;
      for (const auto& v : iv_idx) {
        unsigned mask = 0;
        for (auto f : v) mask |= 1u << col[f];
        sig.push_back(mask);
      }
      if (seen.emplace(sig, signatures.size()).second) {
        signatures.push_back(std::move(sig));
        sig_witness.push_back(col);
      }
      return;
    }
    for (Color c = 0; c < kNumColors; ++c) {
      if (i == 0 && c != seed_color) continue;
      bool ok = true;
      for (auto j : nb[i]) {
        if (j < i && col[j] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      col[i] = c;
      rec(i + 1);
    }
  };
  rec(0);

  std::unordered_map<PackedScheme, std::size_t> first_sig;
  std::vector<std::pair<PackedScheme, Witness>> entries;
  std::vector<Color> x(static_cast<std::size_t>(k));
  for (std::size_t s = 0; s < signatures.size(); ++s) {
    const auto& sig = signatures[s];
    std::function<void(int)> pick = [&](int j) {
      if (j == k) {
        if (options.adjacent_intervals_differ && k >= 2 && x.front() == x.back()) return;
        const PackedScheme p = pack_scheme(x);
        if (first_sig.emplace(p, s).second) entries.emplace_back(p, sig_witness[s]);
        return;
      }
      for (Color c = 0; c < kNumColors; ++c) {
        if (sig[static_cast<std::size_t>(j)] & (1u << c)) continue;
        if (options.adjacent_intervals_differ && j > 0 && x[static_cast<std::size_t>(j - 1)] == c) continue;
        x[static_cast<std::size_t>(j)] = c;
        pick(j + 1);
      }
    };
    pick(0);
  }
  return PrimitiveSet::build(k, std::move(entries), true);
}

std::uint64_t count_cycle_colorings_bruteforce(int k, unsigned excluded_mask) {
  std::uint64_t total = 1;
  for (int j = 0; j < k; ++j) total *= kNumColors;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> x(static_cast<std::size_t>(k));
    std::uint64_t c = code;
    bool ok = true;
    for (int j = 0; j < k; ++j) {
      x[static_cast<std::size_t>(j)] = static_cast<int>(c % kNumColors);
      c /= kNumColors;
      if (excluded_mask & (1u << x[static_cast<std::size_t>(j)])) ok = false;
    }
    for (int j = 0; ok && j < k; ++j) {
      if (k >= 2 && x[static_cast<std::size_t>(j)] == x[static_cast<std::size_t>((j + 1) % k)]) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace fourcolor
