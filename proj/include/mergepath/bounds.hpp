#pragma once

// Exact values, upper and lower bounds on the worst-case minimum merging
// count as a function of the min-cut tuple.

#include <optional>
#include <string>
#include <vector>

#include "mergepath/instance.hpp"

namespace mergepath {

struct BoundReport {
    Variant variant = Variant::M;
    std::vector<std::size_t> cuts;  // sorted ascending
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::optional<std::size_t> exact;
    std::vector<std::string> provenance;  // rule names that produced the numbers
};

// Shared-source reductions: drop cuts equal to 1 and cap the largest cut at
// the sum of the others. Result sorted ascending.
std::vector<std::size_t> reduce_shared_source(std::vector<std::size_t> cuts);

// All functions throw InvalidCut on an empty tuple or a zero entry.
std::optional<std::size_t> exact_value(Variant v, std::vector<std::size_t> cuts);
std::size_t upper_bound_pair(Variant v, std::size_t c1, std::size_t c2);
std::size_t upper_bound(Variant v, std::vector<std::size_t> cuts);
std::size_t lower_bound(Variant v, std::vector<std::size_t> cuts);
BoundReport bound_report(Variant v, std::vector<std::size_t> cuts);

// Intermediate terms of the two-parameter recursion, m <= n.
std::size_t recursion_u(std::size_t m, std::size_t n);
long recursion_v(std::size_t m, std::size_t n);
std::size_t recursion_bound(std::size_t m, std::size_t n);
std::size_t recursion_w_bound(std::size_t m, std::size_t n);

// True when both sorted tuples satisfy small_i <= big_{m-n+i} with m >= n.
bool monotone_check(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big);

}  // namespace mergepath
