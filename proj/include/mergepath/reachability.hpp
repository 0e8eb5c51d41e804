#pragma once

// Semi-reachability between merged subpaths of two path systems, and the
// auxiliary graph used to certify that a merging-reducing rerouting exists.
//
// A step sequence gamma_0 .. gamma_n "through" system i alternates:
//   odd step:  back along a path of the other system to the immediately
//              preceding merged subpath, over a segment sharing no edge with
//              system i;
//   even step: forward along a path h_k of system i to any later merged
//              subpath.
// Even n reads "from above", odd n "from below".

#include <optional>
#include <string>
#include <vector>

#include "mergepath/graph.hpp"
#include "mergepath/menger.hpp"
#include "mergepath/merging.hpp"

namespace mergepath {

// Merged subpaths of one system pair, indexed, with per-path orderings.
class PairView {
public:
    PairView(const Dag& g, PathSystem a, PathSystem b);

    const Dag& graph() const { return *g_; }
    const PathSystem& side(int s) const { return s == 0 ? a_ : b_; }
    int side_of(std::size_t system_index) const;  // throws ValidationFailure

    const std::vector<MergedSubpath>& subpaths() const { return subs_; }
    std::size_t owner(std::size_t sub, int side) const {
        return side == 0 ? subs_[sub].owner_a.path : subs_[sub].owner_b.path;
    }
    // Merged subpaths lying on one path, in path order.
    const std::vector<std::size_t>& along(int side, std::size_t path) const { return along_[side][path]; }
    std::size_t order_on(std::size_t sub, int side) const { return order_[side][sub]; }
    // Edge position of the merge edge on the owner path of `side`.
    std::size_t position_on(std::size_t sub, int side) const { return pos_[side][sub]; }
    bool used_by(int side, EdgeId e) const { return used_[side][e]; }

    // Index of the subpath with this merge edge, if any.
    std::optional<std::size_t> find(EdgeId merge_edge) const;

    // Immediate odd-step target from `sub` when walking through `through_side`.
    std::optional<std::size_t> odd_step(std::size_t sub, int through_side) const;
    // Even-step targets from `sub`, in path order.
    std::vector<std::size_t> even_steps(std::size_t sub, int through_side) const;

private:
    const Dag* g_;
    PathSystem a_;
    PathSystem b_;
    std::vector<MergedSubpath> subs_;
    std::vector<std::vector<std::size_t>> along_[2];
    std::vector<std::size_t> order_[2];
    std::vector<std::size_t> pos_[2];
    std::vector<char> used_[2];
};

enum class Parity { Above, Below };

struct ReachWitness {
    std::vector<std::size_t> sequence;  // indices into PairView::subpaths()
    std::size_t through = 0;            // system index
    std::vector<std::size_t> odd_steps;   // t_k, carrier path in the other system
    std::vector<std::size_t> even_steps;  // h_k, carrier path in `through`
    Parity parity = Parity::Above;

    std::size_t length() const { return sequence.empty() ? 0 : sequence.size() - 1; }
    bool regular() const;
    friend bool operator==(const ReachWitness&, const ReachWitness&) = default;
};

// Checks the witness against the step definition on raw path data.
std::optional<std::string> validate_witness(const PairView& view, const ReachWitness& w);

// Shortest witness from u to v (ties broken by merge-edge id sequence).
// u == v yields the zero-length witness.
std::optional<ReachWitness> semi_reachable(const PairView& view, std::size_t u, std::size_t v,
                                           std::size_t through);

// Non-trivial witness from `sub` back to itself from above, any regularity.
std::optional<ReachWitness> self_reach(const PairView& view, std::size_t sub, std::size_t through);

// Shortest regular self-reach cycle from above starting at one of `seeds`
// (tried in order); empty seeds means every subpath.
std::optional<ReachWitness> find_regular_self_reach(const PairView& view, std::size_t through,
                                                    const std::vector<std::size_t>& seeds = {});

// Concatenates two witnesses through the same system; w1 must be from above.
ReachWitness concat_witness(const ReachWitness& w1, const ReachWitness& w2);

// Splices out repeated even-step carriers until they are distinct.
ReachWitness regularize_witness(const PairView& view, const ReachWitness& w);

enum class AuxKind { Forward, Reversed };

struct AuxAnchor {
    std::size_t subpath = 0;
    bool start = true;  // a(gamma) when true, b(gamma) otherwise
};

struct AuxGraph {
    Dag base;
    std::vector<AuxKind> kind;            // per aux edge
    std::vector<EdgeId> origin_edge;      // per aux edge, edge of the original graph
    std::vector<VertexId> origin_vertex;  // per aux vertex
    std::vector<std::vector<AuxAnchor>> anchors;  // per aux vertex
    std::vector<MergedSubpath> subpaths;
    std::vector<std::size_t> anchor_of_start;  // per subpath, aux vertex of a(gamma)
    std::vector<std::size_t> anchor_of_end;    // per subpath, aux vertex of b(gamma)
    VertexId s1 = 0, r1 = 0, s2 = 0, r2 = 0;
    std::size_t c1 = 0, c2 = 0;
};

AuxGraph build_auxiliary(const PairView& view);
AuxGraph build_auxiliary(const Dag& g, const PathSystem& a, const PathSystem& b);

// Empty when the terminal and anchor degree conditions hold.
std::optional<std::string> check_degrees(const AuxGraph& aux);

struct AuxCycle {
    std::vector<EdgeId> edges;         // aux edge ids in cycle order
    std::vector<std::size_t> anchors;  // subpaths with a terminal on the cycle
};

std::optional<AuxCycle> find_alternating_cycle(const AuxGraph& aux);

struct RegularPath {
    std::vector<EdgeId> edges;  // aux edge ids
    VertexId start = 0;
    VertexId end = 0;
    std::vector<VertexId> interior;  // aux vertices carrying anchors, in order
};

// Throws DegreeViolation when the graph does not split into c1 + c2 paths.
std::vector<RegularPath> regular_decomposition(const AuxGraph& aux);

std::string aux_to_dot(const AuxGraph& aux);

}  // namespace mergepath
