#include "mergepath/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace mergepath {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::VertexNotOnPath: return "VertexNotOnPath";
        case ErrorCode::OrderViolation: return "OrderViolation";
        case ErrorCode::EndpointMismatch: return "EndpointMismatch";
        case ErrorCode::EdgeRepetition: return "EdgeRepetition";
        case ErrorCode::InvalidPath: return "InvalidPath";
        case ErrorCode::CyclicGraph: return "CyclicGraph";
        case ErrorCode::NoPath: return "NoPath";
        case ErrorCode::NotAMerge: return "NotAMerge";
        case ErrorCode::DegreeViolation: return "DegreeViolation";
        case ErrorCode::PreconditionUnverified: return "PreconditionUnverified";
        case ErrorCode::CyclicInput: return "CyclicInput";
        case ErrorCode::StalePlan: return "StalePlan";
        case ErrorCode::ValidationFailure: return "ValidationFailure";
        case ErrorCode::SourceMismatch: return "SourceMismatch";
        case ErrorCode::InvalidCut: return "InvalidCut";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::PartUnavailable: return "PartUnavailable";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    }
    return "Unknown";
}

Dag Dag::build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
               bool allow_cycles) {
    Dag g;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    g.vertex_names_ = std::move(vertices);
    for (VertexId v = 0; v < g.vertex_names_.size(); ++v) g.vertex_index_.emplace(g.vertex_names_[v], v);

    std::vector<const EdgeSpec*> sorted;
    sorted.reserve(edges.size());
    for (const auto& e : edges) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const EdgeSpec* a, const EdgeSpec* b) { return a->id < b->id; });

    g.out_.resize(g.vertex_names_.size());
    g.in_.resize(g.vertex_names_.size());
    for (const EdgeSpec* spec : sorted) {
        if (g.edge_index_.count(spec->id))
            throw Error(ErrorCode::InvalidGraph, "duplicate edge id '" + spec->id + "'");
        auto tail = g.find_vertex(spec->tail);
        auto head = g.find_vertex(spec->head);
        if (!tail || !head)
            throw Error(ErrorCode::InvalidGraph, "edge '" + spec->id + "' has an undeclared endpoint");
        const auto id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back(Edge{spec->id, *tail, *head});
        g.edge_index_.emplace(spec->id, id);
        g.out_[*tail].push_back(id);
        g.in_[*head].push_back(id);
    }

    // Kahn's algorithm; ties broken by smallest vertex index.
    std::vector<std::size_t> indeg(g.vertex_count());
    for (const auto& e : g.edges_) ++indeg[e.head];
    std::set<VertexId> ready;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0) ready.insert(v);
    std::vector<VertexId> order;
    while (!ready.empty()) {
        VertexId v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (EdgeId e : g.out_[v])
            if (--indeg[g.edges_[e].head] == 0) ready.insert(g.edges_[e].head);
    }
    g.acyclic_ = order.size() == g.vertex_count();
    g.cycles_allowed_ = allow_cycles;
    if (!g.acyclic_ && !allow_cycles)
        throw Error(ErrorCode::CyclicGraph, "graph contains a directed cycle");
    if (g.acyclic_) {
        g.topo_ = std::move(order);
        g.rank_.assign(g.vertex_count(), 0);
        for (std::size_t i = 0; i < g.topo_.size(); ++i) g.rank_[g.topo_[i]] = i;
    }
    return g;
}

Dag Dag::from_edges(const std::vector<EdgeSpec>& edges, const std::vector<std::string>& extra,
                    bool allow_cycles) {
    std::vector<std::string> vertices = extra;
    for (const auto& e : edges) {
        vertices.push_back(e.tail);
        vertices.push_back(e.head);
    }
    return build(std::move(vertices), edges, allow_cycles);
}

std::optional<VertexId> Dag::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

VertexId Dag::vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(name) + "'");
    return *v;
}

std::optional<EdgeId> Dag::find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

EdgeId Dag::edge_id(std::string_view name) const {
    auto e = find_edge(name);
    if (!e) throw Error(ErrorCode::UnknownEdge, "no edge '" + std::string(name) + "'");
    return *e;
}

std::vector<bool> Dag::reachable_from(VertexId from) const {
    std::vector<bool> seen(vertex_count(), false);
    std::deque<VertexId> queue{from};
    seen.at(from) = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : out_[v]) {
            VertexId w = edges_[e].head;
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<bool> Dag::reaching(VertexId to) const {
    std::vector<bool> seen(vertex_count(), false);
    std::deque<VertexId> queue{to};
    seen.at(to) = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : in_[v]) {
            VertexId w = edges_[e].tail;
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

bool Dag::reaches(VertexId from, VertexId to) const {
    if (from == to) return true;
    return reachable_from(from)[to];
}

std::vector<EdgeSpec> Dag::edge_specs() const {
    std::vector<EdgeSpec> specs;
    specs.reserve(edges_.size());
    for (const auto& e : edges_)
        specs.push_back(EdgeSpec{e.name, vertex_names_[e.tail], vertex_names_[e.head]});
    return specs;
}

bool is_acyclic(const Dag& g) { return g.acyclic(); }

Path Path::from_edges(const Dag& g, std::vector<EdgeId> edges) {
    if (edges.empty()) throw Error(ErrorCode::InvalidPath, "use Path(vertex) for a degenerate path");
    std::unordered_set<EdgeId> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
        if (!seen.insert(edges[i]).second)
            throw Error(ErrorCode::EdgeRepetition, "edge '" + g.edge_name(edges[i]) + "' repeats");
        if (i > 0 && g.edge(edges[i - 1]).head != g.edge(edges[i]).tail)
            throw Error(ErrorCode::InvalidPath,
                        "edges '" + g.edge_name(edges[i - 1]) + "' and '" + g.edge_name(edges[i]) +
                            "' do not chain");
    }
    Path p;
    p.start_ = g.edge(edges.front()).tail;
    p.end_ = g.edge(edges.back()).head;
    p.edges_ = std::move(edges);
    return p;
}

Path Path::from_names(const Dag& g, const std::vector<std::string>& edge_names) {
    std::vector<EdgeId> ids;
    ids.reserve(edge_names.size());
    for (const auto& n : edge_names) ids.push_back(g.edge_id(n));
    return from_edges(g, std::move(ids));
}

Path Path::unchecked(VertexId start, VertexId end, std::vector<EdgeId> edges) {
    Path p;
    p.start_ = start;
    p.end_ = end;
    p.edges_ = std::move(edges);
    return p;
}

std::vector<VertexId> Path::vertices(const Dag& g) const {
    std::vector<VertexId> vs;
    vs.reserve(edges_.size() + 1);
    vs.push_back(start_);
    for (EdgeId e : edges_) vs.push_back(g.edge(e).head);
    return vs;
}

std::optional<std::size_t> Path::vertex_position(const Dag& g, VertexId v) const {
    if (start_ == v) return 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (g.edge(edges_[i]).head == v) return i + 1;
    return std::nullopt;
}

std::optional<std::size_t> Path::edge_position(EdgeId e) const {
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Path Path::slice(const Dag& g, std::size_t from, std::size_t to) const {
    if (from > to || to > edges_.size()) throw Error(ErrorCode::OrderViolation, "bad slice bounds");
    if (from == to) {
        return Path(from == 0 ? start_ : g.edge(edges_[from - 1]).head);
    }
    Path p;
    p.edges_.assign(edges_.begin() + static_cast<std::ptrdiff_t>(from),
                    edges_.begin() + static_cast<std::ptrdiff_t>(to));
    p.start_ = g.edge(p.edges_.front()).tail;
    p.end_ = g.edge(p.edges_.back()).head;
    return p;
}

std::vector<std::string> Path::edge_names(const Dag& g) const {
    std::vector<std::string> names;
    names.reserve(edges_.size());
    for (EdgeId e : edges_) names.push_back(g.edge_name(e));
    return names;
}

Path subpath(const Dag& g, const Path& p, VertexId s, VertexId t) {
    auto from = p.vertex_position(g, s);
    auto to = p.vertex_position(g, t);
    if (!from) throw Error(ErrorCode::VertexNotOnPath, "vertex '" + g.vertex_name(s) + "' not on path");
    if (!to) throw Error(ErrorCode::VertexNotOnPath, "vertex '" + g.vertex_name(t) + "' not on path");
    if (*to < *from)
        throw Error(ErrorCode::OrderViolation,
                    "'" + g.vertex_name(t) + "' precedes '" + g.vertex_name(s) + "' on path");
    return p.slice(g, *from, *to);
}

Path concat(const Path& p, const Path& q) {
    if (p.end() != q.start()) throw Error(ErrorCode::EndpointMismatch, "paths do not meet");
    if (p.empty()) return q;
    if (q.empty()) return p;
    std::unordered_set<EdgeId> seen(p.edges().begin(), p.edges().end());
    for (EdgeId e : q.edges())
        if (seen.count(e)) throw Error(ErrorCode::EdgeRepetition, "concatenation repeats an edge");
    std::vector<EdgeId> edges = p.edges();
    edges.insert(edges.end(), q.edges().begin(), q.edges().end());
    return Path::unchecked(p.start(), q.end(), std::move(edges));
}

bool is_smaller(const Dag& g, const Path& p, const Path& q) { return g.reaches(p.end(), q.start()); }

Dag prefix_subgraph(const Dag& g, std::span<const VertexId> anchors) {
    if (anchors.empty()) throw Error(ErrorCode::UnknownVertex, "no anchors given");
    std::vector<bool> keep(g.vertex_count(), false);
    for (VertexId a : anchors) {
        if (a >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "anchor out of range");
        auto r = g.reaching(a);
        for (std::size_t v = 0; v < r.size(); ++v)
            if (r[v]) keep[v] = true;
    }
    std::vector<std::string> vertices;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) vertices.push_back(g.vertex_name(v));
    std::vector<EdgeSpec> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (keep[ed.tail] && keep[ed.head])
            edges.push_back(EdgeSpec{ed.name, g.vertex_name(ed.tail), g.vertex_name(ed.head)});
    }
    return Dag::build(std::move(vertices), edges, g.cycles_allowed());
}

}  // namespace mergepath
