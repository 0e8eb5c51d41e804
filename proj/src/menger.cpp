#include "mergepath/menger.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_set>

namespace mergepath {
namespace {

struct Arc {
    EdgeId edge;
    bool forward;
};

// Per-vertex residual arc order: forward arcs then backward arcs, each in
// edge-id order unless shuffled.
std::vector<std::vector<Arc>> arc_order(const Dag& g, const MengerOptions& options) {
    std::vector<std::vector<Arc>> arcs(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (EdgeId e : g.out_edges(v)) arcs[v].push_back({e, true});
        for (EdgeId e : g.in_edges(v)) arcs[v].push_back({e, false});
    }
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        for (auto& list : arcs) std::shuffle(list.begin(), list.end(), rng);
    }
    return arcs;
}

bool augment(const Dag& g, const std::vector<std::vector<Arc>>& arcs, std::vector<char>& flow,
             VertexId s, VertexId t) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Arc> via(g.vertex_count());
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.v == t) break;
        if (top.next == arcs[top.v].size()) {
            stack.pop_back();
            continue;
        }
        const Arc arc = arcs[top.v][top.next++];
        const Edge& ed = g.edge(arc.edge);
        VertexId w;
        if (arc.forward) {
            if (flow[arc.edge]) continue;
            w = ed.head;
        } else {
            if (!flow[arc.edge]) continue;
            w = ed.tail;
        }
        if (seen[w]) continue;
        seen[w] = 1;
        via[w] = arc;
        stack.push_back({w, 0});
    }
    if (!seen[t]) return false;
    for (VertexId v = t; v != s;) {
        const Arc arc = via[v];
        flow[arc.edge] = arc.forward ? 1 : 0;
        v = arc.forward ? g.edge(arc.edge).tail : g.edge(arc.edge).head;
    }
    return true;
}

std::vector<char> max_flow(const Dag& g, VertexId s, VertexId t, const MengerOptions& options,
                           std::size_t& value) {
    if (s >= g.vertex_count() || t >= g.vertex_count())
        throw Error(ErrorCode::UnknownVertex, "terminal out of range");
    std::vector<char> flow(g.edge_count(), 0);
    value = 0;
    if (s == t) return flow;
    auto arcs = arc_order(g, options);
    while (augment(g, arcs, flow, s, t)) ++value;
    return flow;
}

// Peels one s->t path from the flow support, preferring the first arc in the
// per-vertex order at every step and backtracking on dead ends.
std::optional<std::vector<EdgeId>> peel(const Dag& g, const std::vector<std::vector<EdgeId>>& order,
                                        std::vector<char>& support, VertexId s, VertexId t) {
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<char> dead(g.vertex_count(), 0);
    std::vector<EdgeId> path;
    std::vector<std::size_t> cursor{0};
    VertexId v = s;
    on_path[s] = 1;
    while (v != t) {
        bool advanced = false;
        auto& next = cursor.back();
        while (next < order[v].size()) {
            EdgeId e = order[v][next++];
            VertexId w = g.edge(e).head;
            if (!support[e] || on_path[w] || dead[w]) continue;
            path.push_back(e);
            on_path[w] = 1;
            cursor.push_back(0);
            v = w;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (path.empty()) return std::nullopt;
        dead[v] = 1;
        on_path[v] = 0;
        cursor.pop_back();
        v = g.edge(path.back()).tail;
        path.pop_back();
    }
    for (EdgeId e : path) support[e] = 0;
    return path;
}

}  // namespace

std::size_t min_cut(const Dag& g, VertexId s, VertexId t) {
    std::size_t value = 0;
    max_flow(g, s, t, {}, value);
    return value;
}

PathSystem menger_paths(const Dag& g, const PairSpec& pair, const MengerOptions& options) {
    std::size_t value = 0;
    auto flow = max_flow(g, pair.source, pair.sink, options, value);
    if (value == 0)
        throw Error(ErrorCode::NoPath, "no path from '" + g.vertex_name(pair.source) + "' to '" +
                                           g.vertex_name(pair.sink) + "'");

    std::vector<std::vector<EdgeId>> order(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto out = g.out_edges(v);
        order[v].assign(out.begin(), out.end());
    }
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed ^ 0x9e3779b97f4a7c15ULL);
        for (auto& list : order) std::shuffle(list.begin(), list.end(), rng);
    }

    PathSystem system{pair, {}};
    for (std::size_t i = 0; i < value; ++i) {
        auto edges = peel(g, order, flow, pair.source, pair.sink);
        if (!edges) throw Error(ErrorCode::ValidationFailure, "flow decomposition failed");
        system.paths.push_back(Path::from_edges(g, std::move(*edges)));
    }
    return system;
}

PathSystem min_cost_menger(const Dag& g, const PairSpec& pair, const std::vector<long>& edge_cost) {
    if (edge_cost.size() != g.edge_count()) throw Error(ErrorCode::InvalidGraph, "one cost per edge expected");
    if (pair.source >= g.vertex_count() || pair.sink >= g.vertex_count())
        throw Error(ErrorCode::UnknownVertex, "terminal out of range");
    const std::size_t cut = min_cut(g, pair.source, pair.sink);
    if (cut == 0)
        throw Error(ErrorCode::NoPath, "no path from '" + g.vertex_name(pair.source) + "' to '" +
                                           g.vertex_name(pair.sink) + "'");
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<char> flow(g.edge_count(), 0);
    for (std::size_t round = 0; round < cut; ++round) {
        // Bellman-Ford over the residual graph; the graph is small.
        std::vector<long> dist(g.vertex_count(), kInf);
        std::vector<Arc> via(g.vertex_count());
        dist[pair.source] = 0;
        for (std::size_t it = 0; it < g.vertex_count(); ++it) {
            bool relaxed = false;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.edge(e);
                if (!flow[e] && dist[ed.tail] < kInf && dist[ed.tail] + edge_cost[e] < dist[ed.head]) {
                    dist[ed.head] = dist[ed.tail] + edge_cost[e];
                    via[ed.head] = {e, true};
                    relaxed = true;
                }
                if (flow[e] && dist[ed.head] < kInf && dist[ed.head] - edge_cost[e] < dist[ed.tail]) {
                    dist[ed.tail] = dist[ed.head] - edge_cost[e];
                    via[ed.tail] = {e, false};
                    relaxed = true;
                }
            }
            if (!relaxed) break;
        }
        if (dist[pair.sink] >= kInf) throw Error(ErrorCode::ValidationFailure, "augmentation failed below the min-cut");
        for (VertexId v = pair.sink; v != pair.source;) {
            const Arc arc = via[v];
            flow[arc.edge] = arc.forward ? 1 : 0;
            v = arc.forward ? g.edge(arc.edge).tail : g.edge(arc.edge).head;
        }
    }
    std::vector<std::vector<EdgeId>> order(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto out = g.out_edges(v);
        order[v].assign(out.begin(), out.end());
    }
    PathSystem system{pair, {}};
    for (std::size_t i = 0; i < cut; ++i) {
        auto edges = peel(g, order, flow, pair.source, pair.sink);
        if (!edges) throw Error(ErrorCode::ValidationFailure, "flow decomposition failed");
        system.paths.push_back(Path::from_edges(g, std::move(*edges)));
    }
    return system;
}

std::optional<std::string> validate_system(const Dag& g, const PathSystem& system, bool check_maximum) {
    std::unordered_set<EdgeId> used;
    for (std::size_t i = 0; i < system.paths.size(); ++i) {
        const Path& p = system.paths[i];
        if (p.empty()) return "path " + std::to_string(i) + " is empty";
        if (p.start() != system.pair.source || p.end() != system.pair.sink)
            return "path " + std::to_string(i) + " has wrong endpoints";
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] >= g.edge_count()) return "path " + std::to_string(i) + " has an unknown edge";
            if (k > 0 && g.edge(p[k - 1]).head != g.edge(p[k]).tail)
                return "path " + std::to_string(i) + " does not chain";
            if (!used.insert(p[k]).second)
                return "edge '" + g.edge_name(p[k]) + "' used twice in system " +
                       std::to_string(system.pair.index);
        }
        if (g.edge(p[0]).tail != p.start() || g.edge(p[p.size() - 1]).head != p.end())
            return "path " + std::to_string(i) + " endpoints disagree with its edges";
    }
    if (check_maximum) {
        const std::size_t cut = min_cut(g, system.pair.source, system.pair.sink);
        if (cut != system.paths.size())
            return "system " + std::to_string(system.pair.index) + " has " +
                   std::to_string(system.paths.size()) + " paths but min-cut is " + std::to_string(cut);
    }
    return std::nullopt;
}

}  // namespace mergepath
