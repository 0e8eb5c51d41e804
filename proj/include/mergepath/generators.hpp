#pragma once

// Instance constructors: gadgets and their compositions, the extremal
// witnesses (searched once, then frozen under data/), the butterfly, the
// cyclic family, imaginary extensions and seeded random instances.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mergepath/instance.hpp"

namespace mergepath {

// Builds a witness instance for a pair of cuts, or nothing.
using PartBuilder = std::function<std::optional<Instance>(std::size_t, std::size_t)>;

// Single merging between one path of each pair.
Instance gen_gadget_11();

// Two 2-pair parts stacked side by side for pair 0 and chained along pair 1.
// Cuts (c1 + c1', c2); intended is the sum when both parts carry one.
Instance compose_isolated(const Instance& part0, const Instance& part1);
// Any number of parts, chained in order along pair 1.
Instance compose_isolated(const std::vector<Instance>& parts);

// Default builder: the (1,1) gadget, the frozen (2,2) witness, and
// isolated compositions of those.
std::optional<Instance> default_part(std::size_t c1, std::size_t c2);

Instance gen_isolated(std::size_t c10, std::size_t c11, std::size_t c2, const PartBuilder& parts = default_part);

// Systems 0..k-1 against k..n-1, one pair witness per cross pair.
Instance gen_split_family(const std::vector<std::size_t>& cuts, std::size_t k, const PartBuilder& parts = default_part);

Instance gen_extremal_22();
Instance gen_extremal_star33();
// The searches behind the frozen files. Throw SearchExhausted.
Instance search_extremal_22();
Instance search_extremal_star33();
// Writes both frozen files into `dir`.
void regenerate_extremal(const std::string& dir);

Instance gen_star_2rep(std::size_t n);
Instance gen_cyclic_counterexample(std::size_t n);
Instance gen_butterfly();

// Two systems with seven merged subpaths arranged so that one of them
// reaches itself from above through the first system. Merge edges are
// named g0..g5 and g.
Instance gen_reach_example();

// Fresh source and sink per system with one new edge per path end.
Instance extend_imaginary(const Dag& g, const std::vector<PathSystem>& systems);

struct RandomOptions {
    std::size_t pairs = 2;
    bool single_source = false;
    std::size_t max_edges = 30;
    std::size_t max_cut = 3;
    std::size_t min_inner = 4;
    std::size_t max_inner = 8;
};

// Acyclic instance; sources have no in-edges and sinks no out-edges; every
// cut is between 1 and max_cut.
Instance gen_random(std::uint64_t seed, const RandomOptions& options = {});

// Two pairs whose preset paths meet at random shared edges g0, g1, ... in
// index order, with private connectors in between. The presets usually
// carry far more mergings than the graph needs.
Instance gen_random_pattern(std::uint64_t seed, std::size_t max_cut = 3, std::size_t max_edges = 30);

// Name-based dispatch used by the command line.
Instance generate(const std::string& name, const std::vector<std::size_t>& params);

std::string data_dir();

}  // namespace mergepath
