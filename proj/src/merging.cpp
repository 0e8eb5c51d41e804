#include "mergepath/merging.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace mergepath {
namespace {

constexpr EdgeId kNoPred = ~EdgeId{0};

EdgeId pred_at(const Path& p, std::size_t pos) { return pos == 0 ? kNoPred : p[pos - 1]; }

}  // namespace

std::vector<EdgeId> merging_edges(std::span<const Path> paths) {
    std::unordered_map<EdgeId, std::vector<EdgeId>> preds;
    for (const Path& p : paths)
        for (std::size_t i = 0; i < p.size(); ++i) preds[p[i]].push_back(pred_at(p, i));
    std::vector<EdgeId> out;
    for (auto& [e, list] : preds) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::size_t distinct = list.size() - (list.back() == kNoPred ? 1 : 0);
        if (distinct >= 2) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

MergedSubpath merged_subpath(const Dag& g, const Path& pa, const Path& pb, EdgeId e) {
    auto i = pa.edge_position(e);
    auto j = pb.edge_position(e);
    if (!i || !j) throw Error(ErrorCode::NotAMerge, "edge '" + g.edge_name(e) + "' not on both paths");
    if (*i == 0 || *j == 0 || pa[*i - 1] == pb[*j - 1])
        throw Error(ErrorCode::NotAMerge, "paths do not arrive at '" + g.edge_name(e) +
                                              "' through distinct edges");
    std::size_t k = 0;
    while (*i + k < pa.size() && *j + k < pb.size() && pa[*i + k] == pb[*j + k]) ++k;
    MergedSubpath m;
    m.merge_edge = e;
    m.run = pa.slice(g, *i, *i + k);
    return m;
}

std::vector<Path> all_paths(std::span<const PathSystem> systems) {
    std::vector<Path> out;
    for (const auto& s : systems) out.insert(out.end(), s.paths.begin(), s.paths.end());
    return out;
}

std::vector<EdgeId> merging_edges(std::span<const PathSystem> systems) {
    auto paths = all_paths(systems);
    return merging_edges(std::span<const Path>(paths));
}

std::size_t count_mergings(std::span<const PathSystem> systems) { return merging_edges(systems).size(); }

std::vector<EdgeId> pairwise_merging_edges(const PathSystem& a, const PathSystem& b) {
    const PathSystem both[] = {a, b};
    return merging_edges(std::span<const PathSystem>(both));
}

std::size_t pairwise_count(const PathSystem& a, const PathSystem& b) {
    return pairwise_merging_edges(a, b).size();
}

std::vector<MergedSubpath> pairwise_merged_subpaths(const Dag& g, const PathSystem& a,
                                                    const PathSystem& b) {
    std::vector<MergedSubpath> out;
    for (std::size_t ia = 0; ia < a.paths.size(); ++ia) {
        const Path& pa = a.paths[ia];
        std::unordered_map<EdgeId, std::size_t> pos_a;
        for (std::size_t k = 0; k < pa.size(); ++k) pos_a.emplace(pa[k], k);
        for (std::size_t ib = 0; ib < b.paths.size(); ++ib) {
            const Path& pb = b.paths[ib];
            for (std::size_t k = 1; k < pb.size(); ++k) {
                auto it = pos_a.find(pb[k]);
                if (it == pos_a.end() || it->second == 0) continue;
                if (pa[it->second - 1] == pb[k - 1]) continue;
                MergedSubpath m = merged_subpath(g, pa, pb, pb[k]);
                m.owner_a = PathRef{a.pair.index, ia};
                m.owner_b = PathRef{b.pair.index, ib};
                out.push_back(std::move(m));
            }
        }
    }
    auto key = [&](const MergedSubpath& m) {
        const std::size_t rank = g.acyclic() ? g.topo_rank(g.edge(m.merge_edge).tail) : 0;
        return std::make_tuple(rank, m.merge_edge, m.owner_a, m.owner_b);
    };
    std::sort(out.begin(), out.end(),
              [&](const MergedSubpath& x, const MergedSubpath& y) { return key(x) < key(y); });
    return out;
}

MergeCounter::MergeCounter(std::size_t edge_count) : slots_(edge_count) {}

void MergeCounter::bump(EdgeId e, EdgeId pred, int delta) {
    Slot& s = slots_[e];
    const bool was = s.distinct >= 2;
    auto it = std::find_if(s.preds.begin(), s.preds.end(), [&](const auto& p) { return p.first == pred; });
    if (delta > 0) {
        if (it == s.preds.end()) {
            s.preds.emplace_back(pred, 1);
            if (pred != kNone) ++s.distinct;
        } else {
            ++it->second;
        }
    } else {
        if (--it->second == 0) {
            if (pred != kNone) --s.distinct;
            s.preds.erase(it);
        }
    }
    const bool now = s.distinct >= 2;
    if (now && !was) ++merges_;
    if (was && !now) --merges_;
}

void MergeCounter::add(const Path& p) {
    for (std::size_t i = 0; i < p.size(); ++i) bump(p[i], i == 0 ? kNone : p[i - 1], +1);
}

void MergeCounter::remove(const Path& p) {
    for (std::size_t i = 0; i < p.size(); ++i) bump(p[i], i == 0 ? kNone : p[i - 1], -1);
}

}  // namespace mergepath
