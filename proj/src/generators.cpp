#include "mergepath/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "mergepath/merging.hpp"
#include "mergepath/oracle.hpp"
#include "mergepath/rerouting.hpp"

namespace mergepath {
namespace {

// Name-level instance assembly; ids are resolved once at build().
class Builder {
public:
    void vertex(const std::string& v) {
        if (seen_.insert(v).second) vertices_.push_back(v);
    }

    std::string edge(const std::string& tail, const std::string& head, std::string name = {}) {
        vertex(tail);
        vertex(head);
        if (name.empty()) name = "e" + std::to_string(auto_++);
        edges_.push_back({name, tail, head});
        return name;
    }

    // A path from `from` through the merge edges in `merges` (each a_m -> b_m,
    // created on first use) to `to`, joined by fresh connector edges.
    std::vector<std::string> track(const std::string& from, const std::vector<std::string>& merges,
                                   const std::string& to) {
        std::vector<std::string> out;
        std::string at = from;
        for (const auto& m : merges) {
            out.push_back(edge(at, "a_" + m));
            if (made_.insert(m).second) edge("a_" + m, "b_" + m, m);
            out.push_back(m);
            at = "b_" + m;
        }
        out.push_back(edge(at, to));
        return out;
    }

    std::size_t pair(const std::string& s, const std::string& r) {
        vertex(s);
        vertex(r);
        pairs_.emplace_back(s, r);
        paths_.emplace_back();
        return pairs_.size() - 1;
    }

    void path(std::size_t pair, std::vector<std::string> edges) { paths_.at(pair).push_back(std::move(edges)); }

    bool single_source = false;
    bool cyclic = false;
    std::optional<Intended> intended;
    std::string notes;

    Instance build() const {
        Instance inst;
        inst.graph = Dag::build(vertices_, edges_, cyclic);
        inst.single_source = single_source;
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            inst.pairs.push_back({inst.graph.vertex(pairs_[k].first), inst.graph.vertex(pairs_[k].second), k});
        const bool preset = std::any_of(paths_.begin(), paths_.end(), [](const auto& p) { return !p.empty(); });
        if (preset) {
            std::vector<PathSystem> systems;
            for (std::size_t k = 0; k < pairs_.size(); ++k) {
                PathSystem sys{inst.pairs[k], {}};
                for (const auto& names : paths_[k]) sys.paths.push_back(Path::from_names(inst.graph, names));
                systems.push_back(std::move(sys));
            }
            inst.systems = std::move(systems);
        }
        inst.intended = intended;
        inst.notes = notes;
        return inst;
    }

private:
    std::vector<std::string> vertices_;
    std::set<std::string> seen_;
    std::vector<EdgeSpec> edges_;
    std::set<std::string> made_;
    std::vector<std::pair<std::string, std::string>> pairs_;
    std::vector<std::vector<std::vector<std::string>>> paths_;
    std::size_t auto_ = 0;
};

std::vector<PathSystem> systems_of(const Instance& inst) {
    if (inst.systems) return *inst.systems;
    std::vector<PathSystem> out;
    for (const auto& p : inst.pairs) out.push_back(menger_paths(inst.graph, p));
    return out;
}

// Copies every edge of `part` into `b` under `prefix`; returns its systems
// as prefixed edge-name lists. Vertices in `shared` keep the given global name.
std::vector<std::vector<std::vector<std::string>>> embed(Builder& b, const Instance& part, const std::string& prefix,
                                                         const std::map<std::string, std::string>& shared = {}) {
    const Dag& g = part.graph;
    auto vname = [&](VertexId v) {
        auto it = shared.find(g.vertex_name(v));
        return it != shared.end() ? it->second : prefix + g.vertex_name(v);
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) b.vertex(vname(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        b.edge(vname(g.edge(e).tail), vname(g.edge(e).head), prefix + g.edge_name(e));
    std::vector<std::vector<std::vector<std::string>>> out;
    for (const auto& sys : systems_of(part)) {
        out.emplace_back();
        for (const auto& p : sys.paths) {
            out.back().emplace_back();
            for (const auto& name : p.edge_names(g)) out.back().back().push_back(prefix + name);
        }
    }
    return out;
}

std::string terminal(const Instance& inst, std::size_t pair, bool sink) {
    const auto& p = inst.pairs.at(pair);
    return inst.graph.vertex_name(sink ? p.sink : p.source);
}

void require_two_pair(const Instance& inst) {
    if (inst.pairs.size() != 2 || inst.single_source)
        throw Error(ErrorCode::PartUnavailable, "parts must be two-pair instances with distinct sources");
}

std::vector<std::string> joined(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Instance swap_pairs(const Instance& inst) {
    Builder b;
    auto sys = embed(b, inst, "");
    b.pair(terminal(inst, 1, false), terminal(inst, 1, true));
    b.pair(terminal(inst, 0, false), terminal(inst, 0, true));
    for (auto& p : sys[1]) b.path(0, p);
    for (auto& p : sys[0]) b.path(1, p);
    b.intended = inst.intended;
    b.notes = inst.notes;
    return b.build();
}

Instance read_frozen(const std::string& file, Instance (*search)()) {
    const auto path = std::filesystem::path(data_dir()) / file;
    if (std::filesystem::exists(path)) return read_edge_list(path.string());
    return search();
}

// Merge-pattern instance for two 2-path systems: merge k joins P[i_k] and
// Q[j_k]; paths visit their merges in index order.
Instance pattern_22(const std::vector<std::pair<int, int>>& owners) {
    Builder b;
    b.pair("S1", "R1");
    b.pair("S2", "R2");
    std::vector<std::string> p[2], q[2];
    for (std::size_t k = 0; k < owners.size(); ++k) {
        const std::string m = "g" + std::to_string(k);
        p[owners[k].first].push_back(m);
        q[owners[k].second].push_back(m);
    }
    std::vector<std::vector<std::string>> tp, tq;
    for (int i = 0; i < 2; ++i) tp.push_back(b.track("S1", p[i], "R1"));
    for (int j = 0; j < 2; ++j) tq.push_back(b.track("S2", q[j], "R2"));
    for (auto& t : tp) b.path(0, t);
    for (auto& t : tq) b.path(1, t);
    return b.build();
}

// Each path alternates partners between consecutive merges.
bool alternating(const std::vector<std::pair<int, int>>& owners) {
    int last_p[2] = {-1, -1}, last_q[2] = {-1, -1};
    for (auto [i, j] : owners) {
        if (last_p[i] == j || last_q[j] == i) return false;
        last_p[i] = j;
        last_q[j] = i;
    }
    return true;
}

bool no_plan(const Instance& inst) {
    const auto& s = *inst.systems;
    return !detect_reducing_rerouting(inst.graph, s[0], s[1]).has_value();
}

std::vector<std::vector<std::pair<int, int>>> alternating_patterns(std::size_t merges) {
    std::vector<std::vector<std::pair<int, int>>> out;
    const std::size_t total = std::size_t{1} << (2 * merges);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::pair<int, int>> owners;
        for (std::size_t k = 0; k < merges; ++k) {
            const std::size_t d = (code >> (2 * (merges - 1 - k))) & 3;
            owners.emplace_back(static_cast<int>(d >> 1), static_cast<int>(d & 1));
        }
        if (alternating(owners)) out.push_back(std::move(owners));
    }
    return out;
}

std::string pattern_text(const std::vector<std::pair<int, int>>& owners) {
    std::string s;
    for (auto [i, j] : owners) s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    return s;
}

std::size_t parse_count(const std::vector<std::size_t>& params, std::size_t k, const std::string& gen) {
    if (k >= params.size()) throw Error(ErrorCode::ParseError, "generator '" + gen + "' needs more parameters");
    return params[k];
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("MERGEPATH_DATA_DIR")) return env;
#ifdef MERGEPATH_DATA_DIR
    return MERGEPATH_DATA_DIR;
#else
    return "data";
#endif
}

Instance gen_gadget_11() {
    Builder b;
    b.pair("S1", "R1");
    b.pair("S2", "R2");
    b.edge("S1", "u", "s1u");
    b.edge("S2", "u", "s2u");
    b.edge("u", "v", "uv");
    b.edge("v", "R1", "vr1");
    b.edge("v", "R2", "vr2");
    b.path(0, {"s1u", "uv", "vr1"});
    b.path(1, {"s2u", "uv", "vr2"});
    b.intended = Intended{Variant::M, 1};
    b.notes = "one merging at u->v";
    return b.build();
}

Instance compose_isolated(const std::vector<Instance>& parts) {
    if (parts.empty()) throw Error(ErrorCode::PartUnavailable, "nothing to compose");
    for (const auto& p : parts) require_two_pair(p);
    const std::size_t c2 = parts.front().cuts()[1];
    for (const auto& p : parts)
        if (p.cuts()[1] != c2) throw Error(ErrorCode::PartUnavailable, "parts disagree on the second cut");
    Builder b;
    b.pair("S1", "R1");
    b.pair("S2", "R2");
    // Pair 0 terminals of every part are the global S1 and R1.
    std::vector<std::vector<std::vector<std::vector<std::string>>>> sys;
    for (std::size_t k = 0; k < parts.size(); ++k)
        sys.push_back(embed(b, parts[k], "p" + std::to_string(k) + ".",
                            {{terminal(parts[k], 0, false), "S1"}, {terminal(parts[k], 0, true), "R1"}}));
    auto name = [&](std::size_t k, std::size_t pair, bool sink) {
        return "p" + std::to_string(k) + "." + terminal(parts[k], pair, sink);
    };
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (const auto& p : sys[k][0]) b.path(0, p);
    // Pair 1 runs through the parts in order, joined by relay edges.
    for (std::size_t h = 0; h < c2; ++h) {
        std::vector<std::string> path{b.edge("S2", name(0, 1, false))};
        for (std::size_t k = 0; k < parts.size(); ++k) {
            path = joined(path, sys[k][1][h]);
            path.push_back(k + 1 < parts.size() ? b.edge(name(k, 1, true), name(k + 1, 1, false)) : b.edge(name(k, 1, true), "R2"));
        }
        b.path(1, path);
    }
    const bool known = std::all_of(parts.begin(), parts.end(), [](const Instance& p) {
        return p.intended && p.intended->variant == Variant::M;
    });
    if (known) {
        std::size_t sum = 0;
        for (const auto& p : parts) sum += p.intended->value;
        b.intended = Intended{Variant::M, sum};
    }
    b.notes = "isolated composition of " + std::to_string(parts.size()) + " parts";
    return b.build();
}

Instance compose_isolated(const Instance& part0, const Instance& part1) { return compose_isolated({part0, part1}); }

std::optional<Instance> default_part(std::size_t c1, std::size_t c2) {
    if (c1 == 0 || c2 == 0) return std::nullopt;
    if (c1 == 1 && c2 == 1) return gen_gadget_11();
    if (c1 == 2 && c2 == 2) return gen_extremal_22();
    if (c1 < c2) {
        auto flipped = default_part(c2, c1);
        if (!flipped) return std::nullopt;
        return swap_pairs(*flipped);
    }
    // Pieces of 2 against a second cut of 2, otherwise pieces of 1.
    const std::size_t piece = c2 == 2 ? 2 : 1;
    std::vector<Instance> pieces;
    for (std::size_t left = c1; left > 0;) {
        const std::size_t take = std::min(piece, left);
        auto p = default_part(take, c2);
        if (!p) return std::nullopt;
        pieces.push_back(std::move(*p));
        left -= take;
    }
    return compose_isolated(pieces);
}

Instance gen_isolated(std::size_t c10, std::size_t c11, std::size_t c2, const PartBuilder& parts) {
    if (c10 == 0 || c2 == 0) throw Error(ErrorCode::InvalidCut, "cuts must be positive");
    auto p0 = parts(c10, c2);
    if (!p0) throw Error(ErrorCode::PartUnavailable, "no part for cuts (" + std::to_string(c10) + "," + std::to_string(c2) + ")");
    if (c11 == 0) return *p0;
    auto p1 = parts(c11, c2);
    if (!p1) throw Error(ErrorCode::PartUnavailable, "no part for cuts (" + std::to_string(c11) + "," + std::to_string(c2) + ")");
    return compose_isolated(*p0, *p1);
}

Instance gen_split_family(const std::vector<std::size_t>& cuts, std::size_t k, const PartBuilder& parts) {
    const std::size_t n = cuts.size();
    if (n == 0 || k == 0 || k >= n) throw Error(ErrorCode::InvalidCut, "split index must lie strictly inside the tuple");
    for (std::size_t c : cuts)
        if (c == 0) throw Error(ErrorCode::InvalidCut, "cuts must be positive");
    Builder b;
    for (std::size_t i = 0; i < n; ++i) b.pair("S" + std::to_string(i + 1), "R" + std::to_string(i + 1));

    // Gadget (i, j) sits after (i, j-1) on system i and after (i-1, j) on system j.
    std::vector<std::vector<std::vector<std::string>>> acc(n);  // per system, per path, edges so far
    std::vector<std::string> at(n);                              // where each system's paths currently end
    for (std::size_t i = 0; i < n; ++i) {
        acc[i].resize(cuts[i]);
        at[i] = "S" + std::to_string(i + 1);
    }
    std::size_t total = 0;
    bool all_known = true;
    auto hop = [&](std::size_t sys, const std::string& next, const std::vector<std::vector<std::string>>& inner) {
        for (std::size_t h = 0; h < cuts[sys]; ++h) {
            acc[sys][h].push_back(b.edge(at[sys], next));
            acc[sys][h].insert(acc[sys][h].end(), inner[h].begin(), inner[h].end());
        }
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = k; j < n; ++j) {
            auto part = parts(cuts[i], cuts[j]);
            if (!part)
                throw Error(ErrorCode::PartUnavailable, "no part for cuts (" + std::to_string(cuts[i]) + "," +
                                                            std::to_string(cuts[j]) + ")");
            require_two_pair(*part);
            const std::string pre = "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + ".";
            const auto sys = embed(b, *part, pre);
            hop(i, pre + terminal(*part, 0, false), sys[0]);
            at[i] = pre + terminal(*part, 0, true);
            hop(j, pre + terminal(*part, 1, false), sys[1]);
            at[j] = pre + terminal(*part, 1, true);
            if (part->intended && part->intended->variant == Variant::M)
                total += part->intended->value;
            else
                all_known = false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::string sink = "R" + std::to_string(i + 1);
        for (std::size_t h = 0; h < cuts[i]; ++h) {
            acc[i][h].push_back(b.edge(at[i], sink));
            b.path(i, acc[i][h]);
        }
    }
    if (all_known) b.intended = Intended{Variant::M, total};
    b.notes = "split family at " + std::to_string(k);
    return b.build();
}

Instance search_extremal_22() {
    for (const auto& owners : alternating_patterns(5)) {
        Instance inst = pattern_22(owners);
        if (!no_plan(inst)) continue;
        if (brute_force_min_serial(inst.graph, inst.pairs).value != 5) continue;
        inst.intended = Intended{Variant::M, 5};
        inst.notes = "merge pattern " + pattern_text(owners);
        return inst;
    }
    throw Error(ErrorCode::SearchExhausted, "no alternating (2,2) pattern reaches 5");
}

namespace {

// Single-source candidate: the first `shared` paths of each system start on a
// common edge, the rest on private ones.
Instance star33_candidate(const std::vector<std::pair<int, int>>& owners, int shared) {
    Builder b;
    b.single_source = true;
    b.pair("S", "R1");
    b.pair("S", "R2");
    std::vector<std::string> p[3], q[3];
    for (std::size_t k = 0; k < owners.size(); ++k) {
        const std::string m = "g" + std::to_string(k);
        p[owners[k].first].push_back(m);
        q[owners[k].second].push_back(m);
    }
    for (int k = 0; k < 3; ++k) {
        const std::string id = std::to_string(k + 1);
        if (k < shared) {
            const std::string first = b.edge("S", "P" + id, "s" + id);
            b.path(0, joined({first}, b.track("P" + id, p[k], "R1")));
            b.path(1, joined({first}, b.track("P" + id, q[k], "R2")));
        } else {
            b.path(0, joined({b.edge("S", "A" + id, "sa" + id)}, b.track("A" + id, p[k], "R1")));
            b.path(1, joined({b.edge("S", "B" + id, "sb" + id)}, b.track("B" + id, q[k], "R2")));
        }
    }
    return b.build();
}

}  // namespace

Instance search_extremal_star33() {
    // Every owner sequence of five merges, most-shared first edges first.
    constexpr std::size_t merges = 5;
    std::size_t total = 1;
    for (std::size_t k = 0; k < merges; ++k) total *= 9;
    for (int shared = 3; shared >= 0; --shared) {
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::pair<int, int>> owners;
            for (std::size_t k = 0, c = code; k < merges; ++k, c /= 9)
                owners.emplace_back(static_cast<int>(c % 9 / 3), static_cast<int>(c % 3));
            Instance inst = star33_candidate(owners, shared);
            if (!no_plan(inst) || !prefix_reroute_pass(inst.graph, *inst.systems).trace.empty()) continue;
            if (brute_force_min_serial(inst.graph, inst.pairs).value != 5) continue;
            inst.intended = Intended{Variant::Mstar, 5};
            inst.notes = "shared-source merge pattern " + pattern_text(owners);
            return inst;
        }
    }
    throw Error(ErrorCode::SearchExhausted, "no single-source (3,3) merge pattern with five merges has minimum 5");
}

Instance gen_extremal_22() { return read_frozen("extremal_22.txt", &search_extremal_22); }
Instance gen_extremal_star33() { return read_frozen("extremal_star33.txt", &search_extremal_star33); }

void regenerate_extremal(const std::string& dir) {
    std::filesystem::create_directories(dir);
    write_edge_list(search_extremal_22(), (std::filesystem::path(dir) / "extremal_22.txt").string());
    // Written only when the search succeeds; a SearchExhausted leaves no file.
    write_edge_list(search_extremal_star33(), (std::filesystem::path(dir) / "extremal_star33.txt").string());
}

Instance gen_star_2rep(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidCut, "need at least one sink");
    Builder b;
    b.single_source = true;
    for (std::size_t k = 1; k <= n; ++k) b.pair("S", "R" + std::to_string(k));
    const std::string sa = b.edge("S", "A1", "sa");
    const std::string sb = b.edge("S", "B1", "sb");
    // first[k]: edges of path 1 of system k up to its last vertex before the sink.
    std::vector<std::string> first{sa};
    std::string tip = "A1";
    std::vector<std::vector<std::string>> path1, path2;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::string sink = "R" + std::to_string(k);
        path1.push_back(joined(first, {b.edge(tip, sink)}));
        if (k < n) {
            const std::string w = "W" + std::to_string(k + 1), x = "X" + std::to_string(k + 1);
            const std::string into_w = b.edge(tip, w);
            const std::string from_b = b.edge("B1", w);
            const std::string g = b.edge(w, x, "g" + std::to_string(k + 1));
            path2.push_back({sb, from_b, g, b.edge(x, sink)});
            first = joined(first, {into_w, g});
            tip = x;
        } else {
            path2.push_back({sb, b.edge("B1", sink)});
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        b.path(k, path1[k]);
        b.path(k, path2[k]);
    }
    b.intended = Intended{Variant::Mstar, n - 1};
    b.notes = "chained two-path systems";
    return b.build();
}

Instance gen_cyclic_counterexample(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidCut, "need at least one merging");
    Builder b;
    b.cyclic = true;
    b.pair("S1", "R1");
    b.pair("S2", "R2");
    auto a = [](std::size_t k) { return "a" + std::to_string(k); };
    auto bb = [](std::size_t k) { return "b" + std::to_string(k); };
    std::vector<std::string> g(n + 1);
    for (std::size_t k = 1; k <= n; ++k) g[k] = b.edge(a(k), bb(k), "g" + std::to_string(k));
    // Only g_k leaves a_k, and the connectors leave no way around a used g,
    // so both long paths below are forced and meet at every g_k.
    std::vector<std::string> down{b.edge("S1", a(n), "sdown")};
    for (std::size_t k = n; k >= 1; --k) {
        down.push_back(g[k]);
        down.push_back(k > 1 ? b.edge(bb(k), a(k - 1), "d" + std::to_string(k)) : b.edge(bb(1), "R1", "dout"));
    }
    std::vector<std::string> up{b.edge("S2", a(1), "sup")};
    for (std::size_t k = 1; k <= n; ++k) {
        up.push_back(g[k]);
        up.push_back(k < n ? b.edge(bb(k), a(k + 1), "u" + std::to_string(k)) : b.edge(bb(n), "R2", "uout"));
    }
    // d and u already close cycles for n >= 2; n = 1 needs an unusable one.
    if (n == 1) b.edge(bb(1), a(1), "back");
    b.path(0, {b.edge("S1", "R1", "s1")});
    b.path(0, down);
    b.path(1, {b.edge("S2", "R2", "s2")});
    b.path(1, up);
    b.intended = Intended{Variant::M, n};
    b.notes = "cyclic family with " + std::to_string(n) + " mergings";
    return b.build();
}

Instance gen_butterfly() {
    Builder b;
    b.single_source = true;
    b.pair("S", "Y");
    b.pair("S", "Z");
    for (auto [t, h] : std::vector<std::pair<std::string, std::string>>{
             {"S", "T"}, {"S", "U"}, {"T", "Y"}, {"T", "W"}, {"U", "W"}, {"U", "Z"}, {"W", "X"}, {"X", "Y"}, {"X", "Z"}})
        b.edge(t, h, t + h);
    b.path(0, {"ST", "TY"});
    b.path(0, {"SU", "UW", "WX", "XY"});
    b.path(1, {"SU", "UZ"});
    b.path(1, {"ST", "TW", "WX", "XZ"});
    b.intended = Intended{Variant::Mstar, 1};
    b.notes = "butterfly network";
    return b.build();
}

Instance gen_reach_example() {
    Builder b;
    b.pair("Si", "Ri");
    b.pair("Sj", "Rj");
    b.path(0, b.track("Si", {"g1", "g2", "g"}, "Ri"));
    b.path(0, b.track("Si", {"g3", "g4"}, "Ri"));
    b.path(0, b.track("Si", {"g5", "g0"}, "Ri"));
    b.path(1, b.track("Sj", {"g1", "g0"}, "Rj"));
    b.path(1, b.track("Sj", {"g3", "g2"}, "Rj"));
    b.path(1, b.track("Sj", {"g5", "g4"}, "Rj"));
    b.path(1, b.track("Sj", {"g"}, "Rj"));
    b.notes = "seven merged subpaths with a self-reaching g0";
    return b.build();
}

Instance extend_imaginary(const Dag& g, const std::vector<PathSystem>& systems) {
    Builder b;
    for (const auto& v : g.vertex_names()) b.vertex(v);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        b.edge(g.vertex_name(g.edge(e).tail), g.vertex_name(g.edge(e).head), g.edge_name(e));
    auto fresh = [&](std::string name) {
        while (g.find_vertex(name) || g.find_edge(name)) name += "'";
        return name;
    };
    for (std::size_t k = 0; k < systems.size(); ++k) {
        const std::string s = fresh("src" + std::to_string(k));
        const std::string r = fresh("snk" + std::to_string(k));
        b.pair(s, r);
        for (std::size_t h = 0; h < systems[k].paths.size(); ++h) {
            const Path& p = systems[k].paths[h];
            const std::string tag = std::to_string(k) + "_" + std::to_string(h);
            auto in = b.edge(s, g.vertex_name(p.start()), fresh("in" + tag));
            auto out = b.edge(g.vertex_name(p.end()), r, fresh("out" + tag));
            b.path(k, joined(joined({in}, p.edge_names(g)), {out}));
        }
    }
    b.cyclic = g.cycles_allowed();
    b.notes = "imaginary terminals";
    return b.build();
}

Instance gen_random(std::uint64_t seed, const RandomOptions& options) {
    if (options.pairs == 0 || options.max_cut == 0) throw Error(ErrorCode::InvalidCut, "need pairs and a positive cut cap");
    std::mt19937_64 rng(seed);
    for (;;) {
        const std::size_t inner =
            std::uniform_int_distribution<std::size_t>(options.min_inner, std::max(options.min_inner, options.max_inner))(rng);
        std::vector<std::string> sources, sinks, order;
        if (options.single_source)
            sources.push_back("S");
        else
            for (std::size_t k = 1; k <= options.pairs; ++k) sources.push_back("S" + std::to_string(k));
        for (std::size_t k = 1; k <= options.pairs; ++k) sinks.push_back("R" + std::to_string(k));
        order = sources;
        for (std::size_t k = 0; k < inner; ++k) order.push_back("v" + std::to_string(k));
        order.insert(order.end(), sinks.begin(), sinks.end());
        const std::size_t ns = sources.size(), nv = order.size();

        std::set<std::pair<std::size_t, std::size_t>> chosen;
        const std::size_t want = std::uniform_int_distribution<std::size_t>(
            std::min(options.max_edges, inner + 2 * options.pairs), options.max_edges)(rng);
        std::uniform_int_distribution<std::size_t> tail_d(0, ns + inner - 1), head_d(ns, nv - 1);
        for (std::size_t tries = 0; chosen.size() < want && tries < 50 * want; ++tries) {
            const std::size_t t = tail_d(rng), h = head_d(rng);
            if (t < h) chosen.emplace(t, h);
        }
        Builder b;
        b.single_source = options.single_source;
        for (const auto& v : order) b.vertex(v);
        for (std::size_t k = 0; k < options.pairs; ++k) b.pair(options.single_source ? "S" : sources[k], sinks[k]);
        for (auto [t, h] : chosen) b.edge(order[t], order[h]);
        Instance inst = b.build();
        const auto cuts = inst.cuts();
        if (std::all_of(cuts.begin(), cuts.end(), [&](std::size_t c) { return c >= 1 && c <= options.max_cut; })) {
            inst.notes = "random seed " + std::to_string(seed);
            return inst;
        }
    }
}

Instance gen_random_pattern(std::uint64_t seed, std::size_t max_cut, std::size_t max_edges) {
    if (max_cut == 0) throw Error(ErrorCode::InvalidCut, "need a positive cut cap");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> cut_d(1, max_cut);
    const std::size_t c1 = cut_d(rng), c2 = cut_d(rng);
    // Every merge costs its own edge plus one connector on each of its two paths.
    const std::size_t room = max_edges > c1 + c2 ? (max_edges - c1 - c2) / 3 : 0;
    if (room == 0) throw Error(ErrorCode::InvalidCut, "edge cap too small for any merge");
    const std::size_t merges = std::uniform_int_distribution<std::size_t>(1, room)(rng);
    std::vector<std::vector<std::string>> p(c1), q(c2);
    for (std::size_t k = 0; k < merges; ++k) {
        const std::string m = "g" + std::to_string(k);
        p[std::uniform_int_distribution<std::size_t>(0, c1 - 1)(rng)].push_back(m);
        q[std::uniform_int_distribution<std::size_t>(0, c2 - 1)(rng)].push_back(m);
    }
    Builder b;
    b.pair("S1", "R1");
    b.pair("S2", "R2");
    for (const auto& m : p) b.path(0, b.track("S1", m, "R1"));
    for (const auto& m : q) b.path(1, b.track("S2", m, "R2"));
    b.notes = "random merge pattern seed " + std::to_string(seed);
    return b.build();
}

Instance generate(const std::string& name, const std::vector<std::size_t>& params) {
    if (name == "butterfly") return gen_butterfly();
    if (name == "gadget11") return gen_gadget_11();
    if (name == "extremal22") return gen_extremal_22();
    if (name == "extremal_star33") return gen_extremal_star33();
    if (name == "reach_example") return gen_reach_example();
    if (name == "star2rep") return gen_star_2rep(parse_count(params, 0, name));
    if (name == "cyclic") return gen_cyclic_counterexample(parse_count(params, 0, name));
    if (name == "isolated")
        return gen_isolated(parse_count(params, 0, name), parse_count(params, 1, name), parse_count(params, 2, name));
    if (name == "split") {
        const std::size_t k = parse_count(params, 0, name);
        return gen_split_family({params.begin() + 1, params.end()}, k);
    }
    if (name == "random_pattern") return gen_random_pattern(parse_count(params, 0, name));
    if (name == "random" || name == "random_star") {
        RandomOptions o;
        o.single_source = name == "random_star";
        if (params.size() > 1) o.pairs = params[1];
        return gen_random(parse_count(params, 0, name), o);
    }
    throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
}

}  // namespace mergepath
