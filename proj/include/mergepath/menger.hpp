#pragma once

// Unit-capacity max-flow between a source and a sink, and the decomposition
// of a maximum flow into pairwise edge-disjoint paths.

#include <cstdint>
#include <optional>
#include <vector>

#include "mergepath/graph.hpp"

namespace mergepath {

// A set of pairwise edge-disjoint paths for one source/sink pair. When it is
// maximum it is a Menger set.
struct PathSystem {
    PairSpec pair;
    std::vector<Path> paths;

    std::size_t cardinality() const { return paths.size(); }
    friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

// Augmentation/decomposition order. Default is lexicographic by edge id; a
// seed switches to a seeded shuffle of the adjacency order.
struct MengerOptions {
    std::optional<std::uint64_t> shuffle_seed;
};

std::size_t min_cut(const Dag& g, VertexId s, VertexId t);

// Throws UnknownVertex for out-of-range ids and NoPath when the min-cut is 0.
PathSystem menger_paths(const Dag& g, const PairSpec& pair, const MengerOptions& options = {});

// Maximum set of edge-disjoint paths of least total edge cost (successive
// shortest paths). Ties go to lower edge ids. Throws NoPath when the min-cut
// is 0.
PathSystem min_cost_menger(const Dag& g, const PairSpec& pair, const std::vector<long>& edge_cost);

// Checks edge-disjointness, endpoints and (when check_maximum) that the
// cardinality equals an independently recomputed min-cut. Returns a
// description of the first problem found.
std::optional<std::string> validate_system(const Dag& g, const PathSystem& system,
                                           bool check_maximum = true);

}  // namespace mergepath
