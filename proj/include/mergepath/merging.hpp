#pragma once

// Merging detection. Paths merge at an edge e when at least two of them
// traverse e and arrive through two distinct immediately-preceding edges.
// A path that starts with e contributes no predecessor, so path starts never
// create a merging. Mergings are counted once per edge.

#include <span>
#include <utility>
#include <vector>

#include "mergepath/graph.hpp"
#include "mergepath/menger.hpp"

namespace mergepath {

struct PathRef {
    std::size_t system = 0;
    std::size_t path = 0;
    friend auto operator<=>(const PathRef&, const PathRef&) = default;
};

struct MergedSubpath {
    PathRef owner_a;
    PathRef owner_b;
    EdgeId merge_edge = 0;
    Path run;  // starts with merge_edge; maximal shared run

    VertexId start() const { return run.start(); }
    VertexId end() const { return run.end(); }
    friend bool operator==(const MergedSubpath&, const MergedSubpath&) = default;
};

// Sorted edge ids at which the given paths merge.
std::vector<EdgeId> merging_edges(std::span<const Path> paths);

// Throws NotAMerge when e is missing from either path or the predecessors do
// not differ.
MergedSubpath merged_subpath(const Dag& g, const Path& pa, const Path& pb, EdgeId e);

std::vector<Path> all_paths(std::span<const PathSystem> systems);
std::vector<EdgeId> merging_edges(std::span<const PathSystem> systems);
std::size_t count_mergings(std::span<const PathSystem> systems);

// Merging edges between exactly two systems.
std::vector<EdgeId> pairwise_merging_edges(const PathSystem& a, const PathSystem& b);
std::size_t pairwise_count(const PathSystem& a, const PathSystem& b);

// All maximal merged subpaths between a path of `a` and a path of `b`, ordered
// by the topological position of the merge edge, then by owners.
std::vector<MergedSubpath> pairwise_merged_subpaths(const Dag& g, const PathSystem& a,
                                                    const PathSystem& b);

// Incremental distinct-merge-edge counter used by the exhaustive search.
class MergeCounter {
public:
    explicit MergeCounter(std::size_t edge_count);

    void add(const Path& p);
    void remove(const Path& p);
    void add(const PathSystem& s) {
        for (const auto& p : s.paths) add(p);
    }
    void remove(const PathSystem& s) {
        for (const auto& p : s.paths) remove(p);
    }
    std::size_t count() const { return merges_; }

private:
    static constexpr EdgeId kNone = ~EdgeId{0};
    struct Slot {
        std::vector<std::pair<EdgeId, std::uint32_t>> preds;  // pred -> multiplicity
        std::uint32_t distinct = 0;  // distinct non-None predecessors
    };
    void bump(EdgeId e, EdgeId pred, int delta);

    std::vector<Slot> slots_;
    std::size_t merges_ = 0;
};

}  // namespace mergepath
