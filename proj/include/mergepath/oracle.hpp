#pragma once

// Exhaustive minimum-merging search over every combination of Menger path
// systems, one per pair. Exponential; meant for small instances and as the
// reference the minimizer is tested against.

#include <cstddef>
#include <vector>

#include "mergepath/graph.hpp"
#include "mergepath/menger.hpp"

namespace mergepath {

struct OracleOptions {
    std::size_t budget = 1'000'000;  // paths + systems + search nodes
    int jobs = 0;                    // 0: OpenMP default
};

struct OracleResult {
    std::size_t value = 0;
    std::vector<PathSystem> witness;
    std::vector<std::size_t> systems_per_pair;
    std::size_t nodes = 0;
};

// Every Menger system of the pair, paths sorted lexicographically by edge ids.
// Throws NoPath when the pair is disconnected and BudgetExceeded.
std::vector<PathSystem> enumerate_systems(const Dag& g, const PairSpec& pair, std::size_t budget = 1'000'000);

OracleResult brute_force_min(const Dag& g, const std::vector<PairSpec>& pairs, const OracleOptions& options = {});
OracleResult brute_force_min_serial(const Dag& g, const std::vector<PairSpec>& pairs,
                                    const OracleOptions& options = {});

}  // namespace mergepath
