#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourcolor/growth.hpp"
#include "fourcolor/properties.hpp"
#include "json.hpp"

namespace fourcolor {

/// Unconfirmed: the memoized checkers found a violation that could not be
/// shrunk within check_naive's caps, so no report is emitted.
enum class Verdict { Consistent, Counterexample, Skipped, Discarded, Unconfirmed };

const char* to_string(Verdict v);

/// The state a trial starts from: a grown boundary or a bare scheme set.
struct TrialState {
  std::optional<GrowthTrace> trace;
  int k = 0;
  SchemeSet schemes;  // used when trace is absent

  nlohmann::json to_json() const;
};

/// A certified violation after shrinking.
struct CounterexampleReport {
  TrialState state;
  std::vector<AttachmentOp> ops;  // applied to state, in order
  int k_after = 0;
  SchemeSet schemes_after;
  bool failed_A = false;
  bool failed_B = false;
  std::optional<Trail> trail;  // A: trail to an empty set; B: shortest color-losing trail
  bool revalidated = false;    // check_naive reproduced the failure
  std::uint64_t rng_seed = 0;
  std::uint64_t state_index = 0;
  int shrink_steps = 0;
  nlohmann::json caps;

  nlohmann::json to_json() const;
};

struct Trial {
  std::string experiment;  // "theorem1", "theorem2", "theorem3", "decomposition", "abstract"
  std::uint64_t state_index = 0;
  TrialState state;
  std::vector<AttachmentOp> ops;
  std::optional<PropertyReport> before_A, before_B, after_A, after_B;
  Verdict verdict = Verdict::Consistent;
  std::string note;
  /// Incremental set compared against the oracle: absent when out of cap.
  std::optional<bool> oracle_agrees;
  std::optional<CounterexampleReport> counterexample;
  nlohmann::json detail = nlohmann::json::object();

  nlohmann::json to_json() const;
};

struct HarnessOptions {
  PropertyOptions properties;
  GrowthCaps growth;
  int max_polygon = 7;
  bool cross_check_oracle = true;
};

struct TrialSummary {
  std::size_t consistent = 0, counterexample = 0, skipped = 0, discarded = 0, unconfirmed = 0;
  std::size_t oracle_checked = 0, oracle_mismatches = 0;

  nlohmann::json to_json() const;
};

TrialSummary summarize(const std::vector<Trial>& trials);

/// Start state number `index` of a run: a polygon seed of size 2..max_polygon
/// plus a random growth trace, drawn from indexed_rng(seed, index).
GrowthTrace sample_state(std::uint64_t seed, std::uint64_t index, const HarnessOptions& options);

std::vector<Trial> verify_theorem1(int k_max, const HarnessOptions& options = {});

/// `states` start states; every interval of each gets a 2-point region.
std::vector<Trial> verify_theorem2(std::size_t states, std::uint64_t seed, const HarnessOptions& options = {});

/// As verify_theorem2 with every admissible n in 0..n_max.
std::vector<Trial> verify_theorem3(int n_max, std::size_t states, std::uint64_t seed,
                                   const HarnessOptions& options = {});

/// Abstract start state number `index`: sample 0 is the seed-colored k-gon
/// set, later samples are random subsets (at most 32) of all proper k-cycle
/// colorings.
SchemeSet sample_abstract(int k, std::uint64_t seed, std::uint64_t index);

/// Recomputes a "theorem2", "theorem3" or "abstract" trial from (seed, state_index) and its ops.
/// Returns the fresh trial; compare verdicts with the original.
Trial replay_trial(const Trial& trial, std::uint64_t seed, const HarnessOptions& options = {});

/// Two construction orders that should give the same boundary:
/// m-point on BC then a 0-point (or 1-point) region on the boundary interval
/// through B, versus a 1-point (or 2-point) region on AB then an
/// (m-1)-point region on DC.
std::vector<Trial> check_decomposition_equivalences(std::size_t states, std::uint64_t seed,
                                                    const HarnessOptions& options = {});

/// Random subsets of proper k-cycle colorings with A and B, pushed through
/// 2-point (and 3-point while k + 1 <= 5) updates at every interval.
std::vector<Trial> fuzz_abstract(int k, std::size_t samples, std::uint64_t seed, const HarnessOptions& options = {});

}  // namespace fourcolor
