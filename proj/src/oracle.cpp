#include "mergepath/oracle.hpp"

#include <omp.h>

#include <atomic>
#include <cstdint>
#include <limits>

#include "mergepath/merging.hpp"

namespace mergepath {
namespace {

[[noreturn]] void over_budget(std::size_t budget) {
    throw Error(ErrorCode::BudgetExceeded, "oracle budget of " + std::to_string(budget) + " exhausted");
}

std::vector<Path> enumerate_paths(const Dag& g, VertexId s, VertexId t, std::size_t budget, std::size_t& spent) {
    const auto useful = g.reaching(t);
    std::vector<Path> out;
    if (!useful[s]) return out;
    std::vector<EdgeId> stack;
    auto dfs = [&](auto&& self, VertexId v) -> void {
        if (v == t) {
            if (++spent > budget) over_budget(budget);
            out.push_back(Path::unchecked(s, t, stack));
            return;
        }
        for (EdgeId e : g.out_edges(v)) {
            const VertexId w = g.edge(e).head;
            if (!useful[w]) continue;
            stack.push_back(e);
            self(self, w);
            stack.pop_back();
        }
    };
    dfs(dfs, s);
    return out;
}

using Mask = std::vector<std::uint64_t>;

Mask mask_of(const Path& p, std::size_t words) {
    Mask m(words, 0);
    for (EdgeId e : p.edges()) m[e / 64] |= std::uint64_t{1} << (e % 64);
    return m;
}

bool disjoint(const Mask& a, const Mask& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] & b[k]) return false;
    return true;
}

struct Prepared {
    std::vector<std::vector<PathSystem>> systems;
    std::size_t spent = 0;
};

Prepared prepare(const Dag& g, const std::vector<PairSpec>& pairs, std::size_t budget) {
    Prepared p;
    for (const auto& pair : pairs) {
        p.systems.push_back(enumerate_systems(g, pair, budget > p.spent ? budget - p.spent : 0));
        p.spent += p.systems.back().size();
        if (p.spent > budget) over_budget(budget);
    }
    return p;
}

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// Depth-first product search below level `level`; prunes at partial >= best.
struct Walker {
    const std::vector<std::vector<PathSystem>>& systems;
    MergeCounter counter;
    std::vector<std::size_t> choice;
    std::vector<std::size_t> best_choice;
    std::size_t best = kInf;
    std::size_t nodes = 0;

    void run(std::size_t level, const std::atomic<std::size_t>* global, std::atomic<std::size_t>* shared_nodes,
             std::size_t budget) {
        if (level == systems.size()) {
            if (counter.count() < best) {
                best = counter.count();
                best_choice = choice;
            }
            return;
        }
        for (std::size_t k = 0; k < systems[level].size(); ++k) {
            ++nodes;
            if (shared_nodes) {
                if (shared_nodes->fetch_add(1, std::memory_order_relaxed) + 1 > budget) return;
            } else if (nodes > budget) {
                over_budget(budget);
            }
            const PathSystem& sys = systems[level][k];
            counter.add(sys);
            const std::size_t partial = counter.count();
            const bool pruned = partial >= best || (global && partial > global->load(std::memory_order_relaxed));
            if (!pruned) {
                choice[level] = k;
                run(level + 1, global, shared_nodes, budget);
            }
            counter.remove(sys);
        }
    }
};

OracleResult finish(const Prepared& prep, std::size_t value, const std::vector<std::size_t>& choice,
                    std::size_t nodes) {
    OracleResult r;
    r.value = value;
    r.nodes = nodes;
    for (std::size_t l = 0; l < prep.systems.size(); ++l) {
        r.systems_per_pair.push_back(prep.systems[l].size());
        r.witness.push_back(prep.systems[l][choice[l]]);
    }
    return r;
}

}  // namespace

std::vector<PathSystem> enumerate_systems(const Dag& g, const PairSpec& pair, std::size_t budget) {
    const std::size_t cut = min_cut(g, pair.source, pair.sink);
    if (cut == 0)
        throw Error(ErrorCode::NoPath, "no path from '" + g.vertex_name(pair.source) + "' to '" +
                                           g.vertex_name(pair.sink) + "'");
    std::size_t spent = 0;
    auto paths = enumerate_paths(g, pair.source, pair.sink, budget, spent);
    const std::size_t words = (g.edge_count() + 63) / 64;
    std::vector<Mask> masks;
    masks.reserve(paths.size());
    for (const auto& p : paths) masks.push_back(mask_of(p, words));

    std::vector<PathSystem> out;
    std::vector<std::size_t> pick;
    Mask used(words, 0);
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == cut) {
            if (++spent > budget) over_budget(budget);
            PathSystem sys{pair, {}};
            for (std::size_t k : pick) sys.paths.push_back(paths[k]);
            out.push_back(std::move(sys));
            return;
        }
        for (std::size_t k = from; k + (cut - pick.size()) <= paths.size(); ++k) {
            if (!disjoint(used, masks[k])) continue;
            for (std::size_t w = 0; w < words; ++w) used[w] |= masks[k][w];
            pick.push_back(k);
            self(self, k + 1);
            pick.pop_back();
            for (std::size_t w = 0; w < words; ++w) used[w] &= ~masks[k][w];
        }
    };
    dfs(dfs, 0);
    return out;
}

OracleResult brute_force_min_serial(const Dag& g, const std::vector<PairSpec>& pairs, const OracleOptions& options) {
    if (pairs.empty()) return {};
    Prepared prep = prepare(g, pairs, options.budget);
    Walker w{prep.systems, MergeCounter(g.edge_count()), std::vector<std::size_t>(pairs.size(), 0), {}, kInf, 0};
    w.run(0, nullptr, nullptr, options.budget - prep.spent);
    return finish(prep, w.best, w.best_choice, w.nodes);
}

OracleResult brute_force_min(const Dag& g, const std::vector<PairSpec>& pairs, const OracleOptions& options) {
    if (pairs.empty()) return {};
    Prepared prep = prepare(g, pairs, options.budget);
    const auto& first = prep.systems.front();
    const std::size_t n = first.size();
    const std::size_t budget = options.budget - prep.spent;
    std::atomic<std::size_t> global{kInf};
    std::atomic<std::size_t> nodes{0};
    std::vector<std::size_t> value(n, kInf);
    std::vector<std::vector<std::size_t>> choice(n);
    const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t k = 0; k < n; ++k) {
        if (nodes.load(std::memory_order_relaxed) > budget) continue;
        Walker w{prep.systems, MergeCounter(g.edge_count()), std::vector<std::size_t>(pairs.size(), 0), {}, kInf, 0};
        nodes.fetch_add(1, std::memory_order_relaxed);
        w.counter.add(first[k]);
        if (w.counter.count() > global.load(std::memory_order_relaxed)) continue;
        w.choice[0] = k;
        w.run(1, &global, &nodes, budget);
        if (w.best == kInf) continue;
        value[k] = w.best;
        choice[k] = w.best_choice;
        std::size_t seen = global.load();
        while (w.best < seen && !global.compare_exchange_weak(seen, w.best)) {
        }
    }
    if (nodes.load() > budget) over_budget(options.budget);

    std::size_t best_k = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (value[k] < value[best_k]) best_k = k;
    return finish(prep, value[best_k], choice[best_k], nodes.load());
}

}  // namespace mergepath
