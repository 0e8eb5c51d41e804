#pragma once

// Merging-reducing reroutes between path systems and the fixpoint minimizers
// built on them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mergepath/graph.hpp"
#include "mergepath/menger.hpp"
#include "mergepath/reachability.hpp"

namespace mergepath {

enum class PlanKind { CycleRotation, SamePairShortcut, PrefixSwap, LastMergePrefix, SystemSwap };

std::string_view to_string(PlanKind k);

struct PathEdit {
    std::size_t system = 0;  // pair index
    std::size_t path = 0;
    Path replacement;
};

struct ReroutePlan {
    PlanKind kind = PlanKind::CycleRotation;
    std::size_t target_system = 0;
    std::size_t counterpart = 0;
    std::vector<PathEdit> edits;
    long expected_delta = 0;    // change of the pairwise count
    std::uint64_t basis = 0;    // content hash of the systems the plan was built on
};

std::uint64_t content_hash(std::span<const PathSystem> systems);

// Applies the edits without any checking.
std::vector<PathSystem> apply_edits(std::span<const PathSystem> systems, const std::vector<PathEdit>& edits);

// First plan, in rule order, that keeps both systems valid and strictly lowers
// their pairwise count. Throws CyclicInput on a cyclic graph.
std::optional<ReroutePlan> detect_reducing_rerouting(const Dag& g, const PathSystem& a, const PathSystem& b);

// Same search with an extra acceptance test on the rerouted pair.
using PlanFilter = std::function<bool(const ReroutePlan&, const PathSystem&, const PathSystem&)>;
std::optional<ReroutePlan> detect_reducing_rerouting(const Dag& g, const PathSystem& a, const PathSystem& b,
                                                     const PlanFilter& accept);

// Validates and applies; throws StalePlan or ValidationFailure.
std::vector<PathSystem> apply(const Dag& g, const ReroutePlan& plan, std::span<const PathSystem> systems);

struct TraceEntry {
    PlanKind kind;
    std::size_t target = 0;
    std::size_t counterpart = 0;
    std::vector<EdgeId> merges_before;  // pairwise merge edges before
    std::size_t pairwise_before = 0;
    std::size_t pairwise_after = 0;
    std::size_t global_before = 0;
    std::size_t global_after = 0;
};

struct MinimizeResult {
    std::vector<PathSystem> systems;
    std::vector<TraceEntry> trace;
};

MinimizeResult minimize_pair(const Dag& g, const PathSystem& a, const PathSystem& b);
MinimizeResult minimize_all(const Dag& g, std::span<const PathSystem> systems);

// Prefix rules for systems sharing one source. Throws SourceMismatch.
MinimizeResult prefix_reroute_pass(const Dag& g, std::span<const PathSystem> systems);

// minimize_all and prefix_reroute_pass alternated until neither changes
// anything; the prefix pass only runs when every system shares a source.
// At a fixpoint one system at a time is recomputed as a min-cost Menger set
// that avoids the others' edges (SystemSwap) and kept if the count drops.
MinimizeResult minimize(const Dag& g, std::span<const PathSystem> systems);

std::string trace_to_json(const Dag& g, const std::vector<TraceEntry>& trace);

}  // namespace mergepath
