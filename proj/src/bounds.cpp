#include "mergepath/bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace mergepath {
namespace {

std::vector<std::size_t> checked_sorted(std::vector<std::size_t> cuts) {
    if (cuts.empty()) throw Error(ErrorCode::InvalidCut, "empty cut tuple");
    for (std::size_t c : cuts)
        if (c == 0) throw Error(ErrorCode::InvalidCut, "cuts must be positive");
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

std::mutex memo_mutex;
std::map<std::pair<std::size_t, std::size_t>, std::size_t> upper_memo;
std::map<std::pair<std::size_t, std::size_t>, std::size_t> lower_memo;

std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

std::optional<std::size_t> exact_m_pair(std::size_t a, std::size_t b) {
    auto [m, n] = ordered(a, b);
    if (m == 1) return n;
    if (m == 2 && n == 2) return 5;
    return std::nullopt;
}

// Upper bound on M for a pair; M(x, 0) = 0.
std::size_t ub_m(std::size_t a, std::size_t b);

std::size_t mval(std::size_t a, std::size_t b) { return (a == 0 || b == 0) ? 0 : ub_m(a, b); }

std::size_t ub_m_uncached(std::size_t m, std::size_t n) {
    if (auto e = exact_m_pair(m, n)) return *e;
    std::size_t best = m * n * (m + n) / 2;
    best = std::min(best, recursion_bound(m, n));
    best = std::min(best, recursion_w_bound(m, n));
    return best;
}

std::size_t ub_m(std::size_t a, std::size_t b) {
    const auto key = ordered(a, b);
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = upper_memo.find(key); it != upper_memo.end()) return it->second;
    }
    const std::size_t v = ub_m_uncached(key.first, key.second);
    std::lock_guard lock(memo_mutex);
    upper_memo.emplace(key, v);
    return v;
}

std::size_t lb_m(std::size_t a, std::size_t b) {
    const auto key = ordered(a, b);
    if (auto e = exact_m_pair(a, b)) return *e;
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = lower_memo.find(key); it != lower_memo.end()) return it->second;
    }
    std::size_t best = 0;
    for (std::size_t x = 1; x < key.first; ++x) best = std::max(best, lb_m(x, key.second) + lb_m(key.first - x, key.second));
    for (std::size_t y = 1; y < key.second; ++y) best = std::max(best, lb_m(key.first, y) + lb_m(key.first, key.second - y));
    std::lock_guard lock(memo_mutex);
    lower_memo.emplace(key, best);
    return best;
}

std::optional<std::size_t> exact_star(const std::vector<std::size_t>& reduced) {
    if (reduced.size() <= 1) return 0;
    if (std::all_of(reduced.begin(), reduced.end(), [](std::size_t c) { return c == 2; })) return reduced.size() - 1;
    if (reduced.size() == 2 && reduced[0] == 3 && reduced[1] == 3) return 5;
    return std::nullopt;
}

std::size_t ub_star_pair(std::size_t a, std::size_t b) {
    const std::size_t c = std::min(a, b);
    if (c == 1) return 0;
    if (auto e = exact_star({c, c})) return *e;
    return std::min({ub_m(c, c), ub_m(c - 1, c - 1), ub_m(a, b)});
}

}  // namespace

std::vector<std::size_t> reduce_shared_source(std::vector<std::size_t> cuts) {
    cuts = checked_sorted(std::move(cuts));
    for (;;) {
        bool changed = false;
        while (cuts.size() > 1 && cuts.front() == 1) {
            cuts.erase(cuts.begin());
            changed = true;
        }
        if (cuts.size() > 1) {
            const std::size_t rest = std::accumulate(cuts.begin(), cuts.end() - 1, std::size_t{0});
            if (rest < cuts.back()) {
                cuts.back() = rest;
                std::sort(cuts.begin(), cuts.end());
                changed = true;
            }
        }
        if (!changed) return cuts;
    }
}

std::optional<std::size_t> exact_value(Variant v, std::vector<std::size_t> cuts) {
    cuts = checked_sorted(std::move(cuts));
    if (v == Variant::Mstar) return exact_star(reduce_shared_source(cuts));
    if (cuts.size() == 1) return 0;
    if (cuts.size() == 2) return exact_m_pair(cuts[0], cuts[1]);
    return std::nullopt;
}

std::size_t recursion_u(std::size_t m, std::size_t n) {
    std::size_t u = 0;
    for (std::size_t j = 1; j < m; ++j) u += mval(j, m - 1) + 1 + mval(m - j, n);
    return u + mval(m, m - 1) + 1;
}

long recursion_v(std::size_t m, std::size_t n) {
    long v = static_cast<long>(mval(m, n - 1));
    for (std::size_t j = 1; j < m; ++j) v += static_cast<long>(mval(j, n) + 1 + mval(m - j, n));
    return v - static_cast<long>(mval(1, n));
}

std::size_t recursion_bound(std::size_t m, std::size_t n) {
    if (m > n) std::swap(m, n);
    const long b = static_cast<long>(recursion_u(m, n)) + recursion_v(m, n) + static_cast<long>(m) - 2;
    return static_cast<std::size_t>(std::max(b, 0L));
}

std::size_t recursion_w_bound(std::size_t m, std::size_t n) {
    if (m > n) std::swap(m, n);
    std::size_t w = 0;
    for (std::size_t j = 1; j <= m; ++j) w += mval(j, m - 1) + 1;
    const long b = static_cast<long>(m * w) + recursion_v(m, n) + static_cast<long>(m) - 2;
    return static_cast<std::size_t>(std::max(b, 0L));
}

std::size_t upper_bound_pair(Variant v, std::size_t c1, std::size_t c2) {
    checked_sorted({c1, c2});
    return v == Variant::M ? ub_m(c1, c2) : ub_star_pair(c1, c2);
}

std::size_t upper_bound(Variant v, std::vector<std::size_t> cuts) {
    cuts = checked_sorted(std::move(cuts));
    if (auto e = exact_value(v, cuts)) return *e;
    auto sum_pairs = [](const std::vector<std::size_t>& t, auto pair) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) total += pair(t[i], t[j]);
        return total;
    };
    const std::size_t m_sum = sum_pairs(cuts, [](std::size_t a, std::size_t b) { return ub_m(a, b); });
    if (v == Variant::M) return m_sum;
    const auto reduced = reduce_shared_source(cuts);
    return std::min(m_sum, sum_pairs(reduced, [](std::size_t a, std::size_t b) { return ub_star_pair(a, b); }));
}

std::size_t lower_bound(Variant v, std::vector<std::size_t> cuts) {
    cuts = checked_sorted(std::move(cuts));
    if (auto e = exact_value(v, cuts)) return *e;
    if (v == Variant::Mstar) return 0;
    const std::size_t n = cuts.size();
    std::size_t best = 0;
    // Bipartitions with element 0 on the left side.
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<std::size_t> left{cuts[0]}, right;
        for (std::size_t k = 1; k < n; ++k) ((mask >> (k - 1)) & 1 ? left : right).push_back(cuts[k]);
        std::size_t sum = 0;
        for (std::size_t a : left)
            for (std::size_t b : right) sum += lb_m(a, b);
        best = std::max(best, sum);
    }
    return best;
}

BoundReport bound_report(Variant v, std::vector<std::size_t> cuts) {
    cuts = checked_sorted(std::move(cuts));
    BoundReport r;
    r.variant = v;
    r.cuts = cuts;
    r.exact = exact_value(v, cuts);
    r.lower = lower_bound(v, cuts);
    r.upper = upper_bound(v, cuts);
    if (r.exact) {
        r.provenance.push_back("exact-table");
    } else {
        r.provenance.push_back(v == Variant::M ? "bipartition-sum" : "trivial-zero");
        r.provenance.push_back("pairwise-sum");
        if (v == Variant::Mstar) r.provenance.push_back("shared-source-reduction");
    }
    if (cuts.size() >= 2 && !r.exact) {
        r.provenance.push_back("cubic");
        r.provenance.push_back("two-parameter-recursion");
    }
    return r;
}

bool monotone_check(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
    if (small.size() > big.size()) return false;
    if (!std::is_sorted(small.begin(), small.end()) || !std::is_sorted(big.begin(), big.end())) return false;
    const std::size_t shift = big.size() - small.size();
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[shift + i]) return false;
    return true;
}

}  // namespace mergepath
