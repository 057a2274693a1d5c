#include "fourcolor/primitive_set.hpp"

#include <algorithm>
#include <functional>

#include "fourcolor/errors.hpp"

namespace fourcolor {

PackedScheme pack_scheme(std::span<const Color> colors) {
  if (colors.size() > static_cast<std::size_t>(kMaxIntervals)) throw ScaleLimitError("too many intervals to pack");
  PackedScheme s = 0;
  for (std::size_t j = 0; j < colors.size(); ++j) s |= static_cast<PackedScheme>(colors[j] & 3u) << (2 * j);
  return s;
}

std::vector<Color> unpack_scheme(PackedScheme s, int k) {
  std::vector<Color> out(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = scheme_color(s, j);
  return out;
}

std::string scheme_string(PackedScheme s, int k) {
  std::string out;
  for (int j = 0; j < k; ++j) out.push_back(static_cast<char>('0' + scheme_color(s, j)));
  return out;
}

PackedScheme rotate_scheme(PackedScheme s, int k, int shift) {
  std::vector<Color> y(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) y[static_cast<std::size_t>(j)] = scheme_color(s, ((j + shift) % k + k) % k);
  return pack_scheme(y);
}

bool scheme_is_proper(PackedScheme s, int k) {
  if (k < 2) return true;
  for (int j = 0; j < k; ++j)
    if (scheme_color(s, j) == scheme_color(s, (j + 1) % k)) return false;
  return true;
}

PrimitiveSet PrimitiveSet::build(int k, std::vector<std::pair<PackedScheme, Witness>> entries,
                                 bool track_witnesses) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  PrimitiveSet out(k, track_witnesses);
  for (auto& [s, w] : entries) {
    if (!out.schemes_.empty() && out.schemes_.back() == s) continue;
    out.schemes_.push_back(s);
    if (track_witnesses) out.witnesses_.push_back(std::move(w));
  }
  return out;
}

PrimitiveSet PrimitiveSet::from_schemes(int k, SchemeSet schemes) {
  std::sort(schemes.begin(), schemes.end());
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());
  PrimitiveSet out(k, false);
  out.schemes_ = std::move(schemes);
  return out;
}

std::optional<std::size_t> PrimitiveSet::find(PackedScheme s) const {
  auto it = std::lower_bound(schemes_.begin(), schemes_.end(), s);
  if (it == schemes_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - schemes_.begin());
}

nlohmann::json PrimitiveSet::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto s : schemes_) arr.push_back(scheme_string(s, k_));
  return arr;
}

SchemeSet cycle_colorings(int k, unsigned forbidden_mask) {
  SchemeSet out;
  std::vector<Color> x(static_cast<std::size_t>(k));
  std::function<void(int)> rec = [&](int j) {
    if (j == k) {
      if (k >= 2 && x.front() == x.back()) return;
      out.push_back(pack_scheme(x));
      return;
    }
    for (Color c = 0; c < kNumColors; ++c) {
      if (forbidden_mask & (1u << c)) continue;
      if (j > 0 && x[static_cast<std::size_t>(j - 1)] == c) continue;
      x[static_cast<std::size_t>(j)] = c;
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

PrimitiveSet initial_primitive_set(const BoundaryState& seeded) {
  if (seeded.interior().size() != 1) throw InputError("initial primitive set needs a freshly seeded boundary");
  const Color seed = seeded.seed_color();
  std::vector<std::pair<PackedScheme, Witness>> entries;
  for (auto s : cycle_colorings(seeded.k(), 1u << seed)) entries.emplace_back(s, Witness{seed});
  return PrimitiveSet::build(seeded.k(), std::move(entries), true);
}

PrimitiveSet polygon_primitive_set(int k, Color seed_color) {
  return PrimitiveSet::from_schemes(k, cycle_colorings(k, 1u << seed_color));
}

int interval_count_after(int k, int n) {
  if (k == 2 && n == 0) return 1;
  return k + n - 2;
}

void extend_scheme(PackedScheme x, int k, int i, int n, const std::function<void(PackedScheme)>& emit) {
  if (!attachment_allowed(k, n)) throw IllegalAttachment("illegal attachment at k=" + std::to_string(k));
  auto at = [&](int j) { return scheme_color(x, ((j % k) + k) % k); };
  constexpr Color kSlot = 0xFF;
  const Color c = at(i);
  std::vector<Color> y;

  if (k == 2) {
    const Color e = at(i + 1);
    y.push_back(e);
    if (n >= 2) y.insert(y.end(), static_cast<std::size_t>(n - 1), kSlot);
  } else {
    const Color left = at(i - 1);
    const Color right = at(i + 1);
    if (n == 0) {
      if (left != right) return;
      y.push_back(left);
    } else {
      if (left == c || right == c) return;
      y.push_back(left);
      y.insert(y.end(), static_cast<std::size_t>(n - 1), kSlot);
      y.push_back(right);
    }
    for (int j = i + 2; j <= i + k - 2; ++j) y.push_back(at(j));
  }

  const int kk = static_cast<int>(y.size());
  auto cyc = [&](int j) -> Color& { return y[static_cast<std::size_t>(((j % kk) + kk) % kk)]; };
  std::vector<int> slots;
  for (int j = 0; j < kk; ++j)
    if (y[static_cast<std::size_t>(j)] == kSlot) slots.push_back(j);

  std::function<void(std::size_t)> fill = [&](std::size_t s) {
    if (s == slots.size()) {
      const PackedScheme packed = pack_scheme(y);
      if (scheme_is_proper(packed, kk)) emit(packed);
      return;
    }
    const int pos = slots[s];
    for (Color col = 0; col < kNumColors; ++col) {
      if (col == c || col == cyc(pos - 1)) continue;
      if (cyc(pos + 1) != kSlot && cyc(pos + 1) == col) continue;
      cyc(pos) = col;
      fill(s + 1);
      cyc(pos) = kSlot;
    }
  };
  fill(0);
}

PrimitiveSet update_on_attach(const PrimitiveSet& pset, int interval, int n, std::size_t max_schemes) {
  const int k = pset.k();
  if (!attachment_allowed(k, n) || interval < 0 || interval >= k) {
    throw IllegalAttachment("illegal attachment at k=" + std::to_string(k));
  }
  const int k_after = interval_count_after(k, n);
  if (k_after > kMaxIntervals) throw ScaleLimitError("interval count exceeds packing limit");
  std::vector<std::pair<PackedScheme, Witness>> entries;
  for (std::size_t idx = 0; idx < pset.size(); ++idx) {
    const PackedScheme x = pset.schemes()[idx];
    const Color c = scheme_color(x, interval);
    extend_scheme(x, k, interval, n, [&](PackedScheme y) {
      if (entries.size() >= max_schemes) throw ScaleLimitError("primitive set exceeds scheme cap");
      Witness w;
      if (pset.tracks_witnesses()) {
        w = pset.witness(idx);
        w.push_back(c);
      }
      entries.emplace_back(y, std::move(w));
    });
  }
  return PrimitiveSet::build(k_after, std::move(entries), pset.tracks_witnesses());
}

PrimitiveSet update_on_attach(const PrimitiveSet& pset, const BoundaryState& before, const AttachmentOp& op,
                              std::size_t max_schemes) {
  if (before.k() != pset.k()) throw InputError("primitive set and boundary disagree on k");
  return update_on_attach(pset, op.interval, op.n, max_schemes);
}

namespace {

SchemeSet simple_move(const SchemeSet& schemes, int k, int i, int n) {
  if (k < 4) throw IllegalAttachment("simple-region filters need k >= 4");
  SchemeSet out;
  for (auto x : schemes) extend_scheme(x, k, i, n, [&](PackedScheme y) { out.push_back(y); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SchemeSet filter_zero(const SchemeSet& schemes, int k, int i) { return simple_move(schemes, k, i, 0); }

SchemeSet filter_one(const SchemeSet& schemes, int k, int i) { return simple_move(schemes, k, i, 1); }

}  // namespace fourcolor
