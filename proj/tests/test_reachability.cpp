#include "doctest.h"

#include "mergepath/generators.hpp"
#include "mergepath/reachability.hpp"

using namespace mergepath;

namespace {

struct Reach {
    Instance inst = gen_reach_example();
    PairView view{inst.graph, (*inst.systems)[0], (*inst.systems)[1]};

    std::size_t id(const std::string& edge) const { return *view.find(inst.graph.edge_id(edge)); }

    std::optional<Parity> parity(const std::string& from, const std::string& to) const {
        auto w = semi_reachable(view, id(from), id(to), 0);
        if (!w) return std::nullopt;
        CHECK_FALSE(validate_witness(view, *w).has_value());
        return w->parity;
    }
};

}  // namespace

TEST_CASE("reach example relations through the first system") {
    Reach r;
    CHECK(r.view.subpaths().size() == 7);
    for (const char* v : {"g2", "g4", "g"}) CHECK(r.parity("g0", v) == Parity::Above);
    for (const char* v : {"g1", "g3", "g5"}) CHECK(r.parity("g0", v) == Parity::Below);
    for (const char* v : {"g3", "g5"}) CHECK(r.parity("g2", v) == Parity::Below);
    for (const char* u : {"g2", "g4"}) CHECK(r.parity(u, "g") == Parity::Above);
    for (const char* u : {"g0", "g2", "g4"}) {
        auto w = self_reach(r.view, r.id(u), 0);
        REQUIRE(w);
        CHECK(w->parity == Parity::Above);
        CHECK(w->length() == 6);
        CHECK(w->regular());
    }
}

TEST_CASE("witness concatenation and tampering") {
    Reach r;
    auto a = semi_reachable(r.view, r.id("g0"), r.id("g2"), 0);
    auto b = semi_reachable(r.view, r.id("g2"), r.id("g4"), 0);
    REQUIRE(a);
    REQUIRE(b);
    ReachWitness ab = concat_witness(*a, *b);
    CHECK(ab.length() == a->length() + b->length());
    CHECK(ab.parity == Parity::Above);
    CHECK_FALSE(validate_witness(r.view, ab).has_value());

    ReachWitness bad = *a;
    std::swap(bad.sequence[0], bad.sequence[1]);
    CHECK(validate_witness(r.view, bad).has_value());

    auto zero = semi_reachable(r.view, r.id("g5"), r.id("g5"), 0);
    REQUIRE(zero);
    CHECK(zero->length() == 0);
}

TEST_CASE("regularizing a doubled cycle") {
    Reach r;
    auto w = self_reach(r.view, r.id("g0"), 0);
    REQUIRE(w);
    ReachWitness twice = concat_witness(*w, *w);
    CHECK_FALSE(twice.regular());
    ReachWitness reg = regularize_witness(r.view, twice);
    CHECK(reg.regular());
    CHECK(reg.sequence.front() == twice.sequence.front());
    CHECK(reg.sequence.back() == twice.sequence.back());
    CHECK_FALSE(validate_witness(r.view, reg).has_value());
}

TEST_CASE("auxiliary graph on the single-merge gadget") {
    Instance g = gen_gadget_11();
    AuxGraph aux = build_auxiliary(g.graph, (*g.systems)[0], (*g.systems)[1]);
    CHECK_FALSE(check_degrees(aux).has_value());
    CHECK_FALSE(find_alternating_cycle(aux).has_value());
    CHECK(regular_decomposition(aux).size() == 2);
    CHECK(aux_to_dot(aux).find("digraph") != std::string::npos);
}

TEST_CASE("auxiliary graph of the reach example has a cycle") {
    Reach r;
    AuxGraph aux = build_auxiliary(r.view);
    CHECK_FALSE(check_degrees(aux).has_value());
    CHECK(find_alternating_cycle(aux).has_value());
    CHECK_THROWS_AS(regular_decomposition(aux), Error);
}
