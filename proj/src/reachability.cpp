#include "mergepath/reachability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace mergepath {

PairView::PairView(const Dag& g, PathSystem a, PathSystem b)
    : g_(&g), a_(std::move(a)), b_(std::move(b)), subs_(pairwise_merged_subpaths(g, a_, b_)) {
    for (int s = 0; s < 2; ++s) {
        const PathSystem& sys = side(s);
        along_[s].assign(sys.paths.size(), {});
        pos_[s].assign(subs_.size(), 0);
        order_[s].assign(subs_.size(), 0);
        used_[s].assign(g.edge_count(), 0);
        for (const Path& p : sys.paths)
            for (EdgeId e : p.edges()) used_[s][e] = 1;
        for (std::size_t i = 0; i < subs_.size(); ++i) {
            const std::size_t path = owner(i, s);
            pos_[s][i] = *sys.paths[path].edge_position(subs_[i].merge_edge);
            along_[s][path].push_back(i);
        }
        for (auto& list : along_[s]) {
            std::sort(list.begin(), list.end(),
                      [&](std::size_t x, std::size_t y) { return pos_[s][x] < pos_[s][y]; });
            for (std::size_t k = 0; k < list.size(); ++k) order_[s][list[k]] = k;
        }
    }
}

int PairView::side_of(std::size_t system_index) const {
    if (system_index == a_.pair.index) return 0;
    if (system_index == b_.pair.index) return 1;
    throw Error(ErrorCode::ValidationFailure, "system " + std::to_string(system_index) + " not in pair");
}

std::optional<std::size_t> PairView::find(EdgeId merge_edge) const {
    for (std::size_t i = 0; i < subs_.size(); ++i)
        if (subs_[i].merge_edge == merge_edge) return i;
    return std::nullopt;
}

std::optional<std::size_t> PairView::odd_step(std::size_t sub, int through_side) const {
    const int j = 1 - through_side;
    const std::size_t t = owner(sub, j);
    const std::size_t k = order_on(sub, j);
    if (k == 0) return std::nullopt;
    const std::size_t prev = along_[j][t][k - 1];
    const Path& carrier = side(j).paths[t];
    for (std::size_t q = pos_[j][prev] + subs_[prev].run.size(); q < pos_[j][sub]; ++q)
        if (used_by(through_side, carrier[q])) return std::nullopt;
    return prev;
}

std::vector<std::size_t> PairView::even_steps(std::size_t sub, int through_side) const {
    const auto& list = along_[through_side][owner(sub, through_side)];
    return {list.begin() + static_cast<std::ptrdiff_t>(order_on(sub, through_side)) + 1, list.end()};
}

bool ReachWitness::regular() const {
    std::set<std::size_t> seen(even_steps.begin(), even_steps.end());
    return seen.size() == even_steps.size();
}

std::optional<std::string> validate_witness(const PairView& view, const ReachWitness& w) {
    if (w.sequence.empty()) return "empty sequence";
    int i = 0;
    try {
        i = view.side_of(w.through);
    } catch (const Error& e) {
        return std::string(e.what());
    }
    const int j = 1 - i;
    const std::size_t n = w.length();
    for (std::size_t s : w.sequence)
        if (s >= view.subpaths().size()) return "sequence index out of range";
    if (w.odd_steps.size() != (n + 1) / 2 || w.even_steps.size() != n / 2) return "step carrier count mismatch";
    if (w.parity != (n % 2 == 0 ? Parity::Above : Parity::Below)) return "parity does not match length";
    for (std::size_t step = 1; step <= n; ++step) {
        const std::size_t from = w.sequence[step - 1];
        const std::size_t to = w.sequence[step];
        if (step % 2 == 1) {
            const std::size_t t = w.odd_steps[(step - 1) / 2];
            if (view.owner(from, j) != t || view.owner(to, j) != t)
                return "odd step " + std::to_string(step) + " not on carrier";
            if (view.order_on(to, j) >= view.order_on(from, j))
                return "odd step " + std::to_string(step) + " does not go to a smaller subpath";
            const Path& carrier = view.side(j).paths[t];
            const std::size_t lo = view.position_on(to, j) + view.subpaths()[to].run.size();
            for (std::size_t q = lo; q < view.position_on(from, j); ++q)
                if (view.used_by(i, carrier[q]))
                    return "odd step " + std::to_string(step) + " segment meets the through system";
        } else {
            const std::size_t h = w.even_steps[step / 2 - 1];
            if (view.owner(from, i) != h || view.owner(to, i) != h)
                return "even step " + std::to_string(step) + " not on carrier";
            if (view.order_on(to, i) <= view.order_on(from, i))
                return "even step " + std::to_string(step) + " does not go to a larger subpath";
        }
    }
    return std::nullopt;
}

namespace {

struct State {
    std::size_t sub;
    int phase;  // 0: next step is odd, 1: next step is even
};

ReachWitness assemble(const PairView& view, std::vector<std::size_t> seq, std::size_t through) {
    const int i = view.side_of(through);
    ReachWitness w;
    w.through = through;
    for (std::size_t step = 1; step < seq.size(); ++step) {
        if (step % 2 == 1)
            w.odd_steps.push_back(view.owner(seq[step - 1], 1 - i));
        else
            w.even_steps.push_back(view.owner(seq[step - 1], i));
    }
    w.sequence = std::move(seq);
    w.parity = w.length() % 2 == 0 ? Parity::Above : Parity::Below;
    return w;
}

std::vector<std::size_t> by_merge_edge(const PairView& view, std::vector<std::size_t> subs) {
    std::sort(subs.begin(), subs.end(), [&](std::size_t x, std::size_t y) {
        return view.subpaths()[x].merge_edge < view.subpaths()[y].merge_edge;
    });
    return subs;
}

// Breadth-first search over (subpath, phase). `accept` decides whether
// reaching a state by a step ends the search.
template <class Accept>
std::optional<std::vector<std::size_t>> bfs(const PairView& view, std::size_t from, int through_side,
                                            Accept accept) {
    const std::size_t n = view.subpaths().size();
    std::vector<long> parent(2 * n, -2);
    auto id = [&](State s) { return s.sub * 2 + static_cast<std::size_t>(s.phase); };
    std::deque<State> queue{{from, 0}};
    parent[id({from, 0})] = -1;
    auto unwind = [&](State last, std::size_t prev_id) {
        std::vector<std::size_t> seq{last.sub};
        for (long cur = static_cast<long>(prev_id); cur >= 0; cur = parent[static_cast<std::size_t>(cur)])
            seq.push_back(static_cast<std::size_t>(cur) / 2);
        std::reverse(seq.begin(), seq.end());
        return seq;
    };
    while (!queue.empty()) {
        State cur = queue.front();
        queue.pop_front();
        std::vector<std::size_t> next;
        if (cur.phase == 0) {
            if (auto t = view.odd_step(cur.sub, through_side)) next.push_back(*t);
        } else {
            next = by_merge_edge(view, view.even_steps(cur.sub, through_side));
        }
        for (std::size_t x : next) {
            State st{x, 1 - cur.phase};
            if (accept(st)) return unwind(st, id(cur));
            if (parent[id(st)] != -2) continue;
            parent[id(st)] = static_cast<long>(id(cur));
            queue.push_back(st);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ReachWitness> semi_reachable(const PairView& view, std::size_t u, std::size_t v,
                                           std::size_t through) {
    const int i = view.side_of(through);
    if (u == v) return assemble(view, {u}, through);
    auto seq = bfs(view, u, i, [&](State s) { return s.sub == v; });
    if (!seq) return std::nullopt;
    return assemble(view, std::move(*seq), through);
}

std::optional<ReachWitness> self_reach(const PairView& view, std::size_t sub, std::size_t through) {
    const int i = view.side_of(through);
    auto seq = bfs(view, sub, i, [&](State s) { return s.sub == sub && s.phase == 0; });
    if (!seq) return std::nullopt;
    return assemble(view, std::move(*seq), through);
}

std::optional<ReachWitness> find_regular_self_reach(const PairView& view, std::size_t through,
                                                    const std::vector<std::size_t>& seeds) {
    const int i = view.side_of(through);
    std::vector<std::size_t> order = seeds;
    if (order.empty()) {
        order.resize(view.subpaths().size());
        std::iota(order.begin(), order.end(), 0);
    }
    const std::size_t max_m = view.side(i).paths.size();
    std::vector<std::size_t> seq;
    std::vector<char> used_h(max_m, 0);

    // Extends seq (ending at an even position) by one odd and one even step.
    auto extend = [&](auto&& self, std::size_t seed, std::size_t remaining) -> bool {
        auto odd = view.odd_step(seq.back(), i);
        if (!odd) return false;
        const std::size_t h = view.owner(*odd, i);
        if (used_h[h]) return false;
        used_h[h] = 1;
        seq.push_back(*odd);
        for (std::size_t x : by_merge_edge(view, view.even_steps(*odd, i))) {
            if ((remaining == 1) != (x == seed)) continue;
            seq.push_back(x);
            if (remaining == 1 || self(self, seed, remaining - 1)) return true;
            seq.pop_back();
        }
        seq.pop_back();
        used_h[h] = 0;
        return false;
    };

    for (std::size_t m = 1; m <= max_m; ++m) {
        for (std::size_t seed : order) {
            seq.assign(1, seed);
            std::fill(used_h.begin(), used_h.end(), 0);
            if (extend(extend, seed, m)) return assemble(view, seq, through);
        }
    }
    return std::nullopt;
}

ReachWitness concat_witness(const ReachWitness& w1, const ReachWitness& w2) {
    if (w1.through != w2.through || w1.sequence.back() != w2.sequence.front())
        throw Error(ErrorCode::EndpointMismatch, "witnesses do not chain");
    if (w1.parity != Parity::Above)
        throw Error(ErrorCode::OrderViolation, "first witness must be from above");
    ReachWitness w = w1;
    w.sequence.insert(w.sequence.end(), w2.sequence.begin() + 1, w2.sequence.end());
    w.odd_steps.insert(w.odd_steps.end(), w2.odd_steps.begin(), w2.odd_steps.end());
    w.even_steps.insert(w.even_steps.end(), w2.even_steps.begin(), w2.even_steps.end());
    w.parity = w2.parity;
    return w;
}

ReachWitness regularize_witness(const PairView& view, const ReachWitness& w) {
    if (auto err = validate_witness(view, w)) throw Error(ErrorCode::ValidationFailure, *err);
    ReachWitness cur = w;
    while (!cur.regular()) {
        std::size_t k = 0, l = 0;
        for (l = 1; l < cur.even_steps.size(); ++l) {
            auto it = std::find(cur.even_steps.begin(), cur.even_steps.begin() + static_cast<std::ptrdiff_t>(l),
                                cur.even_steps[l]);
            if (it != cur.even_steps.begin() + static_cast<std::ptrdiff_t>(l)) {
                k = static_cast<std::size_t>(it - cur.even_steps.begin());
                break;
            }
        }
        std::vector<std::size_t> seq(cur.sequence.begin(), cur.sequence.begin() + static_cast<std::ptrdiff_t>(2 * k + 2));
        seq.insert(seq.end(), cur.sequence.begin() + static_cast<std::ptrdiff_t>(2 * l + 2), cur.sequence.end());
        ReachWitness next = assemble(view, std::move(seq), cur.through);
        if (validate_witness(view, next)) {
            for (std::size_t s : cur.sequence)
                if (self_reach(view, s, cur.through))
                    throw Error(ErrorCode::PreconditionUnverified,
                                "merged subpath at '" + view.graph().edge_name(view.subpaths()[s].merge_edge) +
                                    "' reaches itself from above");
            throw Error(ErrorCode::ValidationFailure, "shortened witness is invalid");
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace

AuxGraph build_auxiliary(const PairView& view) {
    const Dag& g = view.graph();
    constexpr EdgeId kNone = ~EdgeId{0};
    struct Visit {
        VertexId v;
        EdgeId in, out;
    };
    std::vector<Visit> visits;
    std::vector<std::size_t> offset[2];
    for (int s = 0; s < 2; ++s) {
        for (const Path& p : view.side(s).paths) {
            offset[s].push_back(visits.size());
            auto verts = p.vertices(g);
            for (std::size_t k = 0; k < verts.size(); ++k)
                visits.push_back({verts[k], k == 0 ? kNone : p[k - 1], k == p.size() ? kNone : p[k]});
        }
    }

    const VertexId terminals[4] = {view.side(0).pair.source, view.side(0).pair.sink, view.side(1).pair.source,
                                   view.side(1).pair.sink};
    UnionFind uf(visits.size());
    std::unordered_map<std::uint64_t, std::size_t> first;
    std::unordered_map<VertexId, std::size_t> terminal_visit;
    for (std::size_t x = 0; x < visits.size(); ++x) {
        const Visit& vi = visits[x];
        for (EdgeId e : {vi.in, vi.out}) {
            if (e == kNone) continue;
            auto [it, fresh] = first.emplace((std::uint64_t{vi.v} << 32) | e, x);
            if (!fresh) uf.unite(it->second, x);
        }
        if (std::find(std::begin(terminals), std::end(terminals), vi.v) != std::end(terminals)) {
            auto [it, fresh] = terminal_visit.emplace(vi.v, x);
            if (!fresh) uf.unite(it->second, x);
        }
    }

    // Aux edges: edges used by exactly one side.
    struct Proto {
        std::size_t tail_visit, head_visit;
        EdgeId edge;
        AuxKind kind;
    };
    std::vector<Proto> protos;
    std::vector<std::size_t> tail_of(g.edge_count(), SIZE_MAX), head_of(g.edge_count(), SIZE_MAX);
    for (std::size_t x = 0; x < visits.size(); ++x) {
        if (visits[x].out != kNone) tail_of[visits[x].out] = x;
        if (visits[x].in != kNone) head_of[visits[x].in] = x;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const bool on_a = view.used_by(0, e), on_b = view.used_by(1, e);
        if (on_a == on_b) continue;
        if (on_a)
            protos.push_back({tail_of[e], head_of[e], e, AuxKind::Forward});
        else
            protos.push_back({head_of[e], tail_of[e], e, AuxKind::Reversed});
    }

    const auto& subs = view.subpaths();
    std::vector<std::size_t> start_visit(subs.size()), end_visit(subs.size());
    for (std::size_t s = 0; s < subs.size(); ++s) {
        const std::size_t base = offset[0][view.owner(s, 0)] + view.position_on(s, 0);
        start_visit[s] = base;
        end_visit[s] = base + subs[s].run.size();
    }

    // Classes that survive: terminals, anchors and edge endpoints.
    std::vector<char> keep(visits.size(), 0);
    for (auto& [v, x] : terminal_visit) keep[uf.find(x)] = 1;
    for (const auto& p : protos) keep[uf.find(p.tail_visit)] = keep[uf.find(p.head_visit)] = 1;
    for (std::size_t s = 0; s < subs.size(); ++s) keep[uf.find(start_visit[s])] = keep[uf.find(end_visit[s])] = 1;

    std::unordered_map<std::size_t, std::string> class_name;
    std::unordered_map<VertexId, std::size_t> copies;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < visits.size(); ++x) {
        const std::size_t root = uf.find(x);
        if (root != x || !keep[root]) continue;
        const std::size_t k = copies[visits[x].v]++;
        std::string name = g.vertex_name(visits[x].v);
        if (k > 0) name += "#" + std::to_string(k);
        class_name.emplace(root, name);
        names.push_back(name);
    }
    std::vector<EdgeSpec> specs;
    for (const auto& p : protos)
        specs.push_back({g.edge_name(p.edge), class_name.at(uf.find(p.tail_visit)), class_name.at(uf.find(p.head_visit))});

    AuxGraph aux;
    aux.base = Dag::build(names, specs, true);
    aux.kind.resize(aux.base.edge_count());
    aux.origin_edge.resize(aux.base.edge_count());
    for (const auto& p : protos) {
        EdgeId id = aux.base.edge_id(g.edge_name(p.edge));
        aux.kind[id] = p.kind;
        aux.origin_edge[id] = p.edge;
    }
    auto vertex_of = [&](std::size_t visit) { return aux.base.vertex(class_name.at(uf.find(visit))); };
    aux.origin_vertex.resize(aux.base.vertex_count());
    for (const auto& [root, name] : class_name) aux.origin_vertex[aux.base.vertex(name)] = visits[root].v;
    aux.anchors.resize(aux.base.vertex_count());
    aux.subpaths = subs;
    for (std::size_t s = 0; s < subs.size(); ++s) {
        aux.anchor_of_start.push_back(vertex_of(start_visit[s]));
        aux.anchor_of_end.push_back(vertex_of(end_visit[s]));
        aux.anchors[aux.anchor_of_start.back()].push_back({s, true});
        aux.anchors[aux.anchor_of_end.back()].push_back({s, false});
    }
    aux.s1 = vertex_of(terminal_visit.at(terminals[0]));
    aux.r1 = vertex_of(terminal_visit.at(terminals[1]));
    aux.s2 = vertex_of(terminal_visit.at(terminals[2]));
    aux.r2 = vertex_of(terminal_visit.at(terminals[3]));
    aux.c1 = view.side(0).paths.size();
    aux.c2 = view.side(1).paths.size();
    return aux;
}

AuxGraph build_auxiliary(const Dag& g, const PathSystem& a, const PathSystem& b) {
    return build_auxiliary(PairView(g, a, b));
}

std::optional<std::string> check_degrees(const AuxGraph& aux) {
    const Dag& d = aux.base;
    auto mismatch = [&](const char* what, std::size_t got, std::size_t want) {
        return std::string(what) + " is " + std::to_string(got) + ", expected " + std::to_string(want);
    };
    if (d.out_edges(aux.s1).size() != aux.c1) return mismatch("out-degree of S1", d.out_edges(aux.s1).size(), aux.c1);
    if (d.out_edges(aux.r2).size() != aux.c2) return mismatch("out-degree of R2", d.out_edges(aux.r2).size(), aux.c2);
    if (d.in_edges(aux.s2).size() != aux.c2) return mismatch("in-degree of S2", d.in_edges(aux.s2).size(), aux.c2);
    if (d.in_edges(aux.r1).size() != aux.c1) return mismatch("in-degree of R1", d.in_edges(aux.r1).size(), aux.c1);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (aux.anchors[v].empty()) continue;
        if (d.in_edges(v).size() != 1 || d.out_edges(v).size() != 1)
            return "anchor vertex '" + d.vertex_name(v) + "' has in/out degree " +
                   std::to_string(d.in_edges(v).size()) + "/" + std::to_string(d.out_edges(v).size());
    }
    return std::nullopt;
}

std::optional<AuxCycle> find_alternating_cycle(const AuxGraph& aux) {
    const Dag& d = aux.base;
    if (d.acyclic()) return std::nullopt;
    std::vector<int> color(d.vertex_count(), 0);
    std::vector<EdgeId> via;
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    for (VertexId root = 0; root < d.vertex_count(); ++root) {
        if (color[root]) continue;
        std::vector<Frame> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            Frame& top = stack.back();
            auto out = d.out_edges(top.v);
            if (top.next == out.size()) {
                color[top.v] = 2;
                stack.pop_back();
                if (!via.empty() && !stack.empty()) via.pop_back();
                continue;
            }
            EdgeId e = out[top.next++];
            VertexId w = d.edge(e).head;
            if (color[w] == 1) {
                AuxCycle cyc;
                std::size_t k = 0;
                while (stack[k].v != w) ++k;
                cyc.edges.assign(via.begin() + static_cast<std::ptrdiff_t>(k), via.end());
                cyc.edges.push_back(e);
                std::set<std::size_t> anchors;
                for (EdgeId ce : cyc.edges)
                    for (const auto& an : aux.anchors[d.edge(ce).tail]) anchors.insert(an.subpath);
                cyc.anchors.assign(anchors.begin(), anchors.end());
                return cyc;
            }
            if (color[w] == 2) continue;
            color[w] = 1;
            via.push_back(e);
            stack.push_back({w, 0});
        }
    }
    return std::nullopt;
}

std::vector<RegularPath> regular_decomposition(const AuxGraph& aux) {
    if (auto err = check_degrees(aux)) throw Error(ErrorCode::DegreeViolation, *err);
    const Dag& d = aux.base;
    std::vector<char> used(d.edge_count(), 0);
    std::vector<RegularPath> out;
    for (VertexId from : {aux.s1, aux.r2}) {
        for (EdgeId first : d.out_edges(from)) {
            RegularPath rp;
            rp.start = from;
            EdgeId e = first;
            for (;;) {
                if (used[e]) throw Error(ErrorCode::DegreeViolation, "regular paths share an edge");
                used[e] = 1;
                rp.edges.push_back(e);
                VertexId v = d.edge(e).head;
                if (v == aux.s2 || v == aux.r1) {
                    rp.end = v;
                    break;
                }
                if (d.out_edges(v).size() != 1 || d.in_edges(v).size() != 1)
                    throw Error(ErrorCode::DegreeViolation,
                                "interior vertex '" + d.vertex_name(v) + "' is not a pass-through");
                if (!aux.anchors[v].empty()) rp.interior.push_back(v);
                e = d.out_edges(v)[0];
            }
            out.push_back(std::move(rp));
        }
    }
    for (EdgeId e = 0; e < d.edge_count(); ++e)
        if (!used[e]) throw Error(ErrorCode::DegreeViolation, "edge '" + d.edge_name(e) + "' lies on a cycle");
    return out;
}

std::string aux_to_dot(const AuxGraph& aux) {
    const Dag& d = aux.base;
    std::ostringstream out;
    out << "digraph aux {\n  rankdir=LR;\n";
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        out << "  \"" << d.vertex_name(v) << "\"";
        if (!aux.anchors[v].empty()) {
            out << " [shape=box, label=\"" << d.vertex_name(v);
            for (const auto& an : aux.anchors[v])
                out << "\\n" << (an.start ? "a(" : "b(") << an.subpath << ")";
            out << "\"]";
        }
        out << ";\n";
    }
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        const Edge& ed = d.edge(e);
        out << "  \"" << d.vertex_name(ed.tail) << "\" -> \"" << d.vertex_name(ed.head) << "\" [label=\""
            << ed.name << "\"" << (aux.kind[e] == AuxKind::Reversed ? ", style=dashed" : "") << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mergepath
