#include "doctest.h"

#include "mergepath/bounds.hpp"

using namespace mergepath;

TEST_CASE("exact table") {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(exact_value(Variant::M, {1, n}) == n);
    CHECK(exact_value(Variant::M, {2, 2}) == 5);
    CHECK(exact_value(Variant::Mstar, {2, 2}) == 1);
    CHECK(exact_value(Variant::Mstar, {3, 3}) == 5);
    CHECK(exact_value(Variant::Mstar, {2, 2, 2, 2}) == 3);
    CHECK(exact_value(Variant::Mstar, {1, 4}) == 0);
    CHECK_FALSE(exact_value(Variant::M, {3, 4}).has_value());
    CHECK_THROWS_AS(exact_value(Variant::M, {}), Error);
    CHECK_THROWS_AS(exact_value(Variant::M, {0, 2}), Error);
}

TEST_CASE("recursion terms") {
    CHECK(recursion_u(2, 2) == 7);
    CHECK(recursion_v(2, 2) == 5);
    CHECK(recursion_bound(2, 2) == 12);
}

TEST_CASE("shared-source reduction") {
    CHECK(reduce_shared_source({1, 3, 5}) == std::vector<std::size_t>{3, 3});
    CHECK(reduce_shared_source({2, 2, 9}) == std::vector<std::size_t>{2, 2, 4});
}

TEST_CASE("all-two tuples sum pairwise") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<std::size_t> cuts(n, 2);
        if (n > 2) CHECK(upper_bound(Variant::M, cuts) == 5 * n * (n - 1) / 2);
    }
}

TEST_CASE("monotone tuples") {
    CHECK(monotone_check({1, 2}, {1, 2, 3}));
    CHECK_FALSE(monotone_check({3, 3}, {1, 2, 2}));
}
