#pragma once

// A deliberately simple second oracle for cross-checking the library. It uses
// plain strings and its own path enumeration and merge counting; no library
// algorithms other than reading the graph's edge list.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mergepath/instance.hpp"

namespace naive {

using Route = std::vector<int>;  // edge indices

struct Graph {
    std::vector<std::string> tail, head;
};

inline Graph from(const mergepath::Dag& g) {
    Graph out;
    for (mergepath::EdgeId e = 0; e < g.edge_count(); ++e) {
        out.tail.push_back(g.vertex_name(g.edge(e).tail));
        out.head.push_back(g.vertex_name(g.edge(e).head));
    }
    return out;
}

inline void routes_from(const Graph& g, const std::string& at, const std::string& to, Route& cur,
                        std::vector<char>& used, std::vector<Route>& out) {
    if (at == to && !cur.empty()) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e < static_cast<int>(g.tail.size()); ++e) {
        if (used[e] || g.tail[e] != at) continue;
        used[e] = 1;
        cur.push_back(e);
        routes_from(g, g.head[e], to, cur, used, out);
        cur.pop_back();
        used[e] = 0;
    }
}

inline std::vector<Route> routes(const Graph& g, const std::string& s, const std::string& t) {
    std::vector<Route> out;
    Route cur;
    std::vector<char> used(g.tail.size(), 0);
    routes_from(g, s, t, cur, used, out);
    return out;
}

inline bool disjoint(const Route& a, const Route& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
}

// All maximum-size sets of pairwise edge-disjoint routes.
inline std::vector<std::vector<Route>> systems(const Graph& g, const std::string& s, const std::string& t) {
    const auto all = routes(g, s, t);
    std::vector<std::vector<Route>> best;
    std::vector<Route> cur;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        if (best.empty() || cur.size() > best.front().size()) best.assign(1, cur);
        else if (!cur.empty() && cur.size() == best.front().size()) best.push_back(cur);
        for (std::size_t k = from; k < all.size(); ++k) {
            bool ok = true;
            for (const auto& r : cur) ok = ok && disjoint(r, all[k]);
            if (!ok) continue;
            cur.push_back(all[k]);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    return best;
}

inline std::size_t cut(const Graph& g, const std::string& s, const std::string& t) {
    const auto sys = systems(g, s, t);
    return sys.empty() ? 0 : sys.front().size();
}

// Edges entered by at least two routes through two different previous edges.
inline std::size_t mergings(const std::vector<Route>& rs) {
    std::map<int, std::set<int>> preds;
    for (const auto& r : rs)
        for (std::size_t k = 1; k < r.size(); ++k) preds[r[k]].insert(r[k - 1]);
    std::size_t n = 0;
    for (const auto& [e, p] : preds) n += p.size() >= 2;
    return n;
}

inline std::size_t minimum(const mergepath::Instance& inst) {
    const Graph g = from(inst.graph);
    std::vector<std::vector<std::vector<Route>>> per_pair;
    for (const auto& p : inst.pairs)
        per_pair.push_back(systems(g, inst.graph.vertex_name(p.source), inst.graph.vertex_name(p.sink)));
    std::size_t best = ~std::size_t{0};
    std::vector<Route> chosen;
    auto pick = [&](auto&& self, std::size_t i) -> void {
        if (i == per_pair.size()) {
            best = std::min(best, mergings(chosen));
            return;
        }
        for (const auto& sys : per_pair[i]) {
            chosen.insert(chosen.end(), sys.begin(), sys.end());
            self(self, i + 1);
            chosen.resize(chosen.size() - sys.size());
        }
    };
    pick(pick, 0);
    return best;
}

}  // namespace naive
