#pragma once

// Immutable directed multigraph plus the path algebra used by every other
// component. Vertex and edge ids are opaque strings; internally both are
// dense indices assigned in sorted-id order, so iteration is deterministic.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mergepath/error.hpp"

namespace mergepath {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    std::string name;
    VertexId tail;
    VertexId head;
};

struct EdgeSpec {
    std::string id;
    std::string tail;
    std::string head;
};

class Dag {
public:
    Dag() = default;

    // Throws InvalidGraph on duplicate edge ids or undeclared endpoints, and
    // CyclicGraph when a directed cycle exists and allow_cycles is false.
    static Dag build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                     bool allow_cycles = false);

    // Convenience: vertex set is the set of edge endpoints plus `extra`.
    static Dag from_edges(const std::vector<EdgeSpec>& edges,
                          const std::vector<std::string>& extra = {}, bool allow_cycles = false);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    std::optional<VertexId> find_vertex(std::string_view name) const;
    VertexId vertex(std::string_view name) const;  // throws UnknownVertex

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::string& edge_name(EdgeId e) const { return edges_.at(e).name; }
    std::optional<EdgeId> find_edge(std::string_view name) const;
    EdgeId edge_id(std::string_view name) const;  // throws UnknownEdge

    std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
    std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }

    bool acyclic() const { return acyclic_; }
    bool cycles_allowed() const { return cycles_allowed_; }

    // Only meaningful when acyclic(); empty otherwise.
    const std::vector<VertexId>& topological_order() const { return topo_; }
    // Position of each vertex in topological_order().
    std::size_t topo_rank(VertexId v) const { return rank_.at(v); }

    // Vertices reachable from `from` (including itself).
    std::vector<bool> reachable_from(VertexId from) const;
    // Vertices from which `to` is reachable (including itself).
    std::vector<bool> reaching(VertexId to) const;
    bool reaches(VertexId from, VertexId to) const;

    std::vector<EdgeSpec> edge_specs() const;
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    friend bool operator==(const Dag& a, const Dag& b) {
        return a.vertex_names_ == b.vertex_names_ && a.edge_specs() == b.edge_specs() &&
               a.cycles_allowed_ == b.cycles_allowed_;
    }

private:
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, EdgeId> edge_index_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
    std::vector<VertexId> topo_;
    std::vector<std::size_t> rank_;
    bool acyclic_ = true;
    bool cycles_allowed_ = false;
};

inline bool operator==(const EdgeSpec& a, const EdgeSpec& b) {
    return a.id == b.id && a.tail == b.tail && a.head == b.head;
}

bool is_acyclic(const Dag& g);

// An ordered edge sequence. A path with no edges is a degenerate path sitting
// at a single vertex.
class Path {
public:
    Path() = default;
    explicit Path(VertexId at) : start_(at), end_(at) {}

    // Validates chaining and edge uniqueness (InvalidPath / EdgeRepetition).
    static Path from_edges(const Dag& g, std::vector<EdgeId> edges);
    static Path from_names(const Dag& g, const std::vector<std::string>& edge_names);
    // Caller guarantees the edges chain from start to end.
    static Path unchecked(VertexId start, VertexId end, std::vector<EdgeId> edges);

    VertexId start() const { return start_; }
    VertexId end() const { return end_; }
    const std::vector<EdgeId>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    EdgeId operator[](std::size_t i) const { return edges_[i]; }

    // Vertex sequence of length size()+1.
    std::vector<VertexId> vertices(const Dag& g) const;
    // Index k such that vertices()[k] == v (first occurrence).
    std::optional<std::size_t> vertex_position(const Dag& g, VertexId v) const;
    std::optional<std::size_t> edge_position(EdgeId e) const;
    bool contains_edge(EdgeId e) const { return edge_position(e).has_value(); }

    // Edge run between vertex positions [from, to).
    Path slice(const Dag& g, std::size_t from, std::size_t to) const;

    std::vector<std::string> edge_names(const Dag& g) const;

    friend bool operator==(const Path& a, const Path& b) {
        return a.start_ == b.start_ && a.end_ == b.end_ && a.edges_ == b.edges_;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.edges_ != b.edges_) return a.edges_ < b.edges_;
        return a.start_ < b.start_;
    }

private:
    VertexId start_ = 0;
    VertexId end_ = 0;
    std::vector<EdgeId> edges_;
};

struct PairSpec {
    VertexId source = 0;
    VertexId sink = 0;
    std::size_t index = 0;

    friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

// gamma[s, t]: the contiguous run of p from s to t.
Path subpath(const Dag& g, const Path& p, VertexId s, VertexId t);

// p followed by q; requires end(p) == start(q) and no repeated edge.
Path concat(const Path& p, const Path& q);

// True iff a directed path (possibly empty) runs from end(p) to start(q).
bool is_smaller(const Dag& g, const Path& p, const Path& q);

// Subgraph induced by every vertex that can reach one of the anchors.
Dag prefix_subgraph(const Dag& g, std::span<const VertexId> anchors);

}  // namespace mergepath
