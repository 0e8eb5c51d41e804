#include "mergepath/rerouting.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "mergepath/merging.hpp"

namespace mergepath {

std::string_view to_string(PlanKind k) {
    switch (k) {
        case PlanKind::CycleRotation: return "cycle_rotation";
        case PlanKind::SamePairShortcut: return "same_pair_shortcut";
        case PlanKind::PrefixSwap: return "prefix_swap";
        case PlanKind::LastMergePrefix: return "last_merge_prefix";
        case PlanKind::SystemSwap: return "system_swap";
    }
    return "unknown";
}

std::uint64_t content_hash(std::span<const PathSystem> systems) {
    std::vector<const PathSystem*> sorted;
    for (const auto& s : systems) sorted.push_back(&s);
    std::sort(sorted.begin(), sorted.end(),
              [](const PathSystem* x, const PathSystem* y) { return x->pair.index < y->pair.index; });
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ULL;
    };
    for (const PathSystem* s : sorted) {
        mix(s->pair.index);
        mix(s->paths.size());
        for (const Path& p : s->paths) {
            mix(p.start());
            mix(p.end());
            mix(p.size());
            for (EdgeId e : p.edges()) mix(e);
        }
    }
    return h;
}

std::vector<PathSystem> apply_edits(std::span<const PathSystem> systems, const std::vector<PathEdit>& edits) {
    std::vector<PathSystem> out(systems.begin(), systems.end());
    for (const auto& ed : edits) {
        auto it = std::find_if(out.begin(), out.end(), [&](const PathSystem& s) { return s.pair.index == ed.system; });
        if (it == out.end() || ed.path >= it->paths.size())
            throw Error(ErrorCode::ValidationFailure, "edit refers to a missing path");
        it->paths[ed.path] = ed.replacement;
    }
    return out;
}

namespace {

std::vector<EdgeId> range(const Path& p, std::size_t from, std::size_t to) {
    return {p.edges().begin() + static_cast<std::ptrdiff_t>(from), p.edges().begin() + static_cast<std::ptrdiff_t>(to)};
}

void append(std::vector<EdgeId>& out, const std::vector<EdgeId>& more) { out.insert(out.end(), more.begin(), more.end()); }

// Prop-3 style rotation of the `through` system along a regular self-reach cycle.
std::optional<std::vector<PathEdit>> rotation_edits(const PairView& view, const ReachWitness& w) {
    const Dag& g = view.graph();
    const int i = view.side_of(w.through);
    const int j = 1 - i;
    const PathSystem& si = view.side(i);
    const PathSystem& sj = view.side(j);
    const std::size_t m = w.even_steps.size();
    std::vector<PathEdit> edits;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t g_even = w.sequence[2 * k];
        const std::size_t g_odd = w.sequence[2 * k + 1];
        const std::size_t hk = w.even_steps[k];
        const std::size_t hprev = w.even_steps[(k + m - 1) % m];
        const std::size_t tk = w.odd_steps[k];
        const std::size_t odd_len = view.subpaths()[g_odd].run.size();
        std::vector<EdgeId> edges = range(si.paths[hk], 0, view.position_on(g_odd, i) + odd_len);
        append(edges, range(sj.paths[tk], view.position_on(g_odd, j) + odd_len, view.position_on(g_even, j)));
        const Path& tail = si.paths[hprev];
        append(edges, range(tail, view.position_on(g_even, i), tail.size()));
        try {
            edits.push_back({si.pair.index, hk, Path::from_edges(g, std::move(edges))});
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    return edits;
}

struct Search {
    const Dag& g;
    const PathSystem& a;
    const PathSystem& b;
    const PlanFilter& accept;
    std::size_t before;
    std::uint64_t basis;
    std::optional<ReroutePlan> found;

    bool consider(PlanKind kind, std::size_t target, std::vector<PathEdit> edits) {
        const PathSystem pair[] = {a, b};
        std::vector<PathSystem> next;
        try {
            next = apply_edits(pair, edits);
        } catch (const Error&) {
            return false;
        }
        for (const auto& s : next)
            if (validate_system(g, s, false)) return false;
        const std::size_t after = pairwise_count(next[0], next[1]);
        if (after >= before) return false;
        ReroutePlan plan;
        plan.kind = kind;
        plan.target_system = target;
        plan.counterpart = target == a.pair.index ? b.pair.index : a.pair.index;
        plan.edits = std::move(edits);
        plan.expected_delta = static_cast<long>(after) - static_cast<long>(before);
        plan.basis = basis;
        if (accept && !accept(plan, next[0], next[1])) return false;
        found = std::move(plan);
        return true;
    }

    bool rotate(const PairView& view, const std::optional<ReachWitness>& w) {
        if (!w) return false;
        auto edits = rotation_edits(view, *w);
        return edits && consider(PlanKind::CycleRotation, w->through, std::move(*edits));
    }
};

bool try_shortcuts(const PairView& view, Search& search) {
    const auto& subs = view.subpaths();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < subs.size(); ++x)
        for (std::size_t y = 0; y < subs.size(); ++y)
            if (x != y && view.owner(x, 0) == view.owner(y, 0) && view.owner(x, 1) == view.owner(y, 1) &&
                view.order_on(x, 0) < view.order_on(y, 0))
                pairs.emplace_back(x, y);
    std::sort(pairs.begin(), pairs.end(), [&](auto p, auto q) {
        return std::make_pair(subs[p.first].merge_edge, subs[p.second].merge_edge) <
               std::make_pair(subs[q.first].merge_edge, subs[q.second].merge_edge);
    });
    for (auto [x, y] : pairs) {
        for (int side : {0, 1}) {
            const PathSystem& own = view.side(side);
            const PathSystem& other = view.side(1 - side);
            const Path& p = own.paths[view.owner(x, side)];
            const Path& q = other.paths[view.owner(x, 1 - side)];
            std::vector<EdgeId> edges = range(p, 0, view.position_on(x, side));
            append(edges, range(q, view.position_on(x, 1 - side), view.position_on(y, 1 - side)));
            append(edges, range(p, view.position_on(y, side), p.size()));
            Path np;
            try {
                np = Path::from_edges(view.graph(), std::move(edges));
            } catch (const Error&) {
                continue;
            }
            if (search.consider(PlanKind::SamePairShortcut, own.pair.index,
                                {{own.pair.index, view.owner(x, side), std::move(np)}}))
                return true;
        }
    }
    return false;
}

bool try_seeded(const PairView& view, Search& search, const std::vector<std::size_t>& seeds) {
    for (int side : {0, 1}) {
        const std::size_t sys = view.side(side).pair.index;
        for (std::size_t s : seeds)
            if (search.rotate(view, find_regular_self_reach(view, sys, {s}))) return true;
    }
    return false;
}

bool try_repeated_pairs(const PairView& view, const AuxGraph& aux, Search& search) {
    std::vector<RegularPath> paths;
    try {
        paths = regular_decomposition(aux);
    } catch (const Error&) {
        return false;
    }
    for (const auto& rp : paths) {
        std::vector<std::size_t> seq;
        for (VertexId v : rp.interior)
            for (const auto& an : aux.anchors[v])
                if (seq.empty() || seq.back() != an.subpath) seq.push_back(an.subpath);
        for (std::size_t hi = 0; hi < seq.size(); ++hi) {
            for (std::size_t lo = 0; lo < hi; ++lo) {
                if (seq[lo] == seq[hi]) continue;
                if (view.owner(seq[lo], 0) != view.owner(seq[hi], 0) || view.owner(seq[lo], 1) != view.owner(seq[hi], 1))
                    continue;
                std::vector<std::size_t> seeds{seq[hi]};
                for (std::size_t k = hi; k-- > lo;) seeds.push_back(seq[k]);
                if (try_seeded(view, search, seeds)) return true;
            }
        }
    }
    return false;
}

}  // namespace

std::optional<ReroutePlan> detect_reducing_rerouting(const Dag& g, const PathSystem& a, const PathSystem& b) {
    return detect_reducing_rerouting(g, a, b, PlanFilter{});
}

std::optional<ReroutePlan> detect_reducing_rerouting(const Dag& g, const PathSystem& a, const PathSystem& b,
                                                     const PlanFilter& accept) {
    if (!g.acyclic()) throw Error(ErrorCode::CyclicInput, "rerouting is only defined on acyclic graphs");
    const PathSystem pair[] = {a, b};
    Search search{g, a, b, accept, pairwise_count(a, b), content_hash(pair), std::nullopt};
    if (search.before == 0) return std::nullopt;
    PairView view(g, a, b);

    if (try_shortcuts(view, search)) return search.found;

    AuxGraph aux = build_auxiliary(view);
    if (auto cyc = find_alternating_cycle(aux)) {
        if (try_seeded(view, search, cyc->anchors)) return search.found;
    } else if (!check_degrees(aux)) {
        if (try_repeated_pairs(view, aux, search)) return search.found;
    }

    std::vector<std::size_t> all(view.subpaths().size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    std::sort(all.begin(), all.end(), [&](std::size_t x, std::size_t y) {
        return view.subpaths()[x].merge_edge < view.subpaths()[y].merge_edge;
    });
    if (try_seeded(view, search, all)) return search.found;
    return std::nullopt;
}

namespace {

const PathSystem& by_index(std::span<const PathSystem> systems, std::size_t index) {
    for (const auto& s : systems)
        if (s.pair.index == index) return s;
    throw Error(ErrorCode::ValidationFailure, "no system with index " + std::to_string(index));
}

std::size_t pair_total(std::span<const PathSystem> systems) {
    std::size_t total = 0;
    for (std::size_t x = 0; x < systems.size(); ++x)
        for (std::size_t y = x + 1; y < systems.size(); ++y) total += pairwise_count(systems[x], systems[y]);
    return total;
}

}  // namespace

std::vector<PathSystem> apply(const Dag& g, const ReroutePlan& plan, std::span<const PathSystem> systems) {
    const PathSystem basis[] = {by_index(systems, plan.target_system), by_index(systems, plan.counterpart)};
    if (content_hash(basis) != plan.basis) throw Error(ErrorCode::StalePlan, "systems changed since the plan was made");
    std::vector<PathSystem> next = apply_edits(systems, plan.edits);
    for (const auto& ed : plan.edits)
        if (auto err = validate_system(g, by_index(next, ed.system), true))
            throw Error(ErrorCode::ValidationFailure, *err);
    const std::size_t before = pairwise_count(basis[0], basis[1]);
    const std::size_t after =
        pairwise_count(by_index(next, plan.target_system), by_index(next, plan.counterpart));
    if (after >= before)
        throw Error(ErrorCode::ValidationFailure, "pairwise count did not decrease (" + std::to_string(before) +
                                                      " -> " + std::to_string(after) + ")");
    return next;
}

MinimizeResult minimize_pair(const Dag& g, const PathSystem& a, const PathSystem& b) {
    if (!g.acyclic()) throw Error(ErrorCode::CyclicInput, "rerouting is only defined on acyclic graphs");
    MinimizeResult res{{a, b}, {}};
    while (auto plan = detect_reducing_rerouting(g, res.systems[0], res.systems[1])) {
        TraceEntry t{plan->kind, plan->target_system, plan->counterpart,
                     pairwise_merging_edges(res.systems[0], res.systems[1]), 0, 0, count_mergings(res.systems), 0};
        t.pairwise_before = t.merges_before.size();
        res.systems = apply(g, *plan, res.systems);
        t.pairwise_after = pairwise_count(res.systems[0], res.systems[1]);
        t.global_after = count_mergings(res.systems);
        res.trace.push_back(std::move(t));
    }
    return res;
}

MinimizeResult minimize_all(const Dag& g, std::span<const PathSystem> systems) {
    if (!g.acyclic()) throw Error(ErrorCode::CyclicInput, "rerouting is only defined on acyclic graphs");
    MinimizeResult res{{systems.begin(), systems.end()}, {}};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < res.systems.size(); ++x) {
            for (std::size_t y = x + 1; y < res.systems.size(); ++y) {
                for (;;) {
                    const std::size_t global = count_mergings(res.systems);
                    const std::size_t total = pair_total(res.systems);
                    PlanFilter filter = [&](const ReroutePlan&, const PathSystem& na, const PathSystem& nb) {
                        std::vector<PathSystem> trial = res.systems;
                        trial[x] = na;
                        trial[y] = nb;
                        const std::size_t ng = count_mergings(trial);
                        return ng < global || (ng == global && pair_total(trial) < total);
                    };
                    auto plan = detect_reducing_rerouting(g, res.systems[x], res.systems[y], filter);
                    if (!plan) break;
                    TraceEntry t{plan->kind, plan->target_system, plan->counterpart,
                                 pairwise_merging_edges(res.systems[x], res.systems[y]), 0, 0, global, 0};
                    t.pairwise_before = t.merges_before.size();
                    res.systems = apply(g, *plan, res.systems);
                    t.pairwise_after = pairwise_count(res.systems[x], res.systems[y]);
                    t.global_after = count_mergings(res.systems);
                    res.trace.push_back(std::move(t));
                    changed = true;
                }
            }
        }
    }
    return res;
}

MinimizeResult prefix_reroute_pass(const Dag& g, std::span<const PathSystem> systems) {
    if (systems.empty()) return {};
    const VertexId source = systems.front().pair.source;
    for (const auto& s : systems)
        if (s.pair.source != source) throw Error(ErrorCode::SourceMismatch, "systems do not share a source");
    MinimizeResult res{{systems.begin(), systems.end()}, {}};

    auto attempt = [&](PlanKind kind) -> bool {
        const std::size_t global = count_mergings(res.systems);
        for (std::size_t s = 0; s < res.systems.size(); ++s) {
            for (std::size_t q = 0; q < res.systems.size(); ++q) {
                if (q == s) continue;
                auto subs = pairwise_merged_subpaths(g, res.systems[s], res.systems[q]);
                for (std::size_t p = 0; p < res.systems[s].paths.size(); ++p) {
                    std::vector<const MergedSubpath*> on_p;
                    for (const auto& m : subs)
                        if (m.owner_a.path == p) on_p.push_back(&m);
                    const Path& own = res.systems[s].paths[p];
                    auto pos = [](const Path& path, EdgeId e) { return *path.edge_position(e); };
                    std::sort(on_p.begin(), on_p.end(), [&](auto* x, auto* y) {
                        return pos(own, x->merge_edge) < pos(own, y->merge_edge);
                    });
                    if (kind == PlanKind::LastMergePrefix) std::reverse(on_p.begin(), on_p.end());
                    for (const MergedSubpath* m : on_p) {
                        const Path& other = res.systems[q].paths[m->owner_b.path];
                        const std::size_t len = kind == PlanKind::PrefixSwap ? m->run.size() : 0;
                        std::vector<EdgeId> edges = range(other, 0, pos(other, m->merge_edge) + len);
                        append(edges, range(own, pos(own, m->merge_edge) + len, own.size()));
                        Path np;
                        try {
                            np = Path::from_edges(g, std::move(edges));
                        } catch (const Error&) {
                            continue;
                        }
                        std::vector<PathSystem> trial = res.systems;
                        trial[s].paths[p] = np;
                        if (validate_system(g, trial[s], false)) continue;
                        const std::size_t ng = count_mergings(trial);
                        if (ng >= global) continue;
                        TraceEntry t{kind, res.systems[s].pair.index, res.systems[q].pair.index,
                                     pairwise_merging_edges(res.systems[s], res.systems[q]), 0, 0, global, ng};
                        t.pairwise_before = t.merges_before.size();
                        t.pairwise_after = pairwise_count(trial[s], trial[q]);
                        res.trace.push_back(std::move(t));
                        res.systems = std::move(trial);
                        return true;
                    }
                }
            }
        }
        return false;
    };
    while (attempt(PlanKind::PrefixSwap) || attempt(PlanKind::LastMergePrefix)) {
    }
    return res;
}

namespace {

// Replaces one whole system by a min-cost Menger set whose edge costs steer it
// away from the edges of the other systems. Accepts the first candidate that
// lowers (global, sum of pairwise) and keeps the system maximum.
bool system_swap(const Dag& g, MinimizeResult& res) {
    const std::size_t global = count_mergings(res.systems);
    const std::size_t total = pair_total(res.systems);
    for (std::size_t s = 0; s < res.systems.size(); ++s) {
        std::vector<char> foreign(g.edge_count(), 0);
        for (std::size_t q = 0; q < res.systems.size(); ++q)
            if (q != s)
                for (const auto& p : res.systems[q].paths)
                    for (EdgeId e : p.edges()) foreign[e] = 1;
        // Shared edges only, then shared edges dominating path length.
        for (long unit : {0L, 1L}) {
            std::vector<long> cost(g.edge_count());
            for (EdgeId e = 0; e < g.edge_count(); ++e) cost[e] = (foreign[e] ? 1000 : 0) + unit;
            PathSystem cand = min_cost_menger(g, res.systems[s].pair, cost);
            if (cand == res.systems[s] || validate_system(g, cand, true)) continue;
            std::vector<PathSystem> trial = res.systems;
            trial[s] = cand;
            const std::size_t ng = count_mergings(trial);
            const std::size_t nt = pair_total(trial);
            if (!(ng < global || (ng == global && nt < total))) continue;
            TraceEntry t{PlanKind::SystemSwap, res.systems[s].pair.index, res.systems[s].pair.index, {}, total, nt,
                         global, ng};
            res.trace.push_back(std::move(t));
            res.systems = std::move(trial);
            return true;
        }
    }
    return false;
}

}  // namespace

MinimizeResult minimize(const Dag& g, std::span<const PathSystem> systems) {
    MinimizeResult res{{systems.begin(), systems.end()}, {}};
    const bool shared = std::all_of(systems.begin(), systems.end(),
                                    [&](const PathSystem& s) { return s.pair.source == systems.front().pair.source; });
    for (;;) {
        MinimizeResult step = minimize_all(g, res.systems);
        res.systems = std::move(step.systems);
        res.trace.insert(res.trace.end(), step.trace.begin(), step.trace.end());
        if (shared && res.systems.size() >= 2) {
            MinimizeResult pre = prefix_reroute_pass(g, res.systems);
            if (!pre.trace.empty()) {
                res.systems = std::move(pre.systems);
                res.trace.insert(res.trace.end(), pre.trace.begin(), pre.trace.end());
                continue;
            }
        }
        if (res.systems.size() < 2 || !system_swap(g, res)) break;
    }
    return res;
}

std::string trace_to_json(const Dag& g, const std::vector<TraceEntry>& trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : trace) {
        nlohmann::json merges = nlohmann::json::array();
        for (EdgeId e : t.merges_before) merges.push_back(g.edge_name(e));
        out.push_back({{"rule", std::string(to_string(t.kind))},
                       {"target", t.target},
                       {"counterpart", t.counterpart},
                       {"merges_before", merges},
                       {"pairwise_before", t.pairwise_before},
                       {"pairwise_after", t.pairwise_after},
                       {"global_before", t.global_before},
                       {"global_after", t.global_after}});
    }
    return out.dump(2);
}

}  // namespace mergepath
