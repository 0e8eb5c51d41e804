#include "doctest.h"

#include "mergepath/graph.hpp"
#include "mergepath/instance.hpp"
#include "mergepath/menger.hpp"
#include "mergepath/merging.hpp"

using namespace mergepath;

namespace {

Dag diamond() {
    return Dag::from_edges({{"a", "S", "X"}, {"b", "S", "Y"}, {"c", "X", "T"}, {"d", "Y", "T"}, {"e", "X", "Y"}});
}

}  // namespace

TEST_CASE("dag indexes vertices in sorted order") {
    Dag g = diamond();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);
    CHECK(g.vertex_name(0) == "S");
    CHECK(g.reaches(g.vertex("S"), g.vertex("T")));
    CHECK_FALSE(g.reaches(g.vertex("Y"), g.vertex("X")));
    CHECK_THROWS_AS(g.vertex("Q"), Error);
}

TEST_CASE("cycles are rejected unless allowed") {
    std::vector<EdgeSpec> e{{"a", "u", "v"}, {"b", "v", "u"}};
    try {
        Dag::from_edges(e);
        FAIL("expected CyclicGraph");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::CyclicGraph);
    }
    Dag g = Dag::from_edges(e, {}, true);
    CHECK_FALSE(g.acyclic());
}

TEST_CASE("path construction and slicing") {
    Dag g = diamond();
    Path p = Path::from_names(g, {"a", "e", "d"});
    CHECK(p.start() == g.vertex("S"));
    CHECK(p.end() == g.vertex("T"));
    Path mid = subpath(g, p, g.vertex("X"), g.vertex("T"));
    CHECK(mid.edge_names(g) == std::vector<std::string>{"e", "d"});
    Path head = subpath(g, p, g.vertex("S"), g.vertex("X"));
    CHECK(concat(head, mid) == p);
    CHECK_THROWS_AS(Path::from_names(g, {"a", "d"}), Error);
    CHECK(is_smaller(g, Path::from_names(g, {"a"}), Path::from_names(g, {"e"})));
}

TEST_CASE("menger paths on a diamond") {
    Dag g = diamond();
    PairSpec pair{g.vertex("S"), g.vertex("T"), 0};
    CHECK(min_cut(g, pair.source, pair.sink) == 2);
    for (std::uint64_t seed : {0ull, 1ull, 7ull, 99ull}) {
        PathSystem sys = menger_paths(g, pair, {seed});
        CHECK(sys.cardinality() == 2);
        CHECK_FALSE(validate_system(g, sys).has_value());
    }
}

TEST_CASE("merging requires distinct predecessors") {
    Dag g = Dag::from_edges({{"s1", "A", "M"}, {"s2", "B", "M"}, {"m", "M", "N"}, {"t", "N", "Z"}});
    Path p1 = Path::from_names(g, {"s1", "m", "t"});
    Path p2 = Path::from_names(g, {"s2", "m", "t"});
    std::vector<Path> both{p1, p2};
    CHECK(merging_edges(std::span<const Path>(both)) == std::vector<EdgeId>{g.edge_id("m")});
    MergedSubpath sub = merged_subpath(g, p1, p2, g.edge_id("m"));
    CHECK(sub.run.edge_names(g) == std::vector<std::string>{"m", "t"});

    Path tail = Path::from_names(g, {"m", "t"});
    std::vector<Path> starts{p1, tail};
    CHECK(merging_edges(std::span<const Path>(starts)).empty());

    MergeCounter counter(g.edge_count());
    counter.add(p1);
    counter.add(tail);
    CHECK(counter.count() == 0);
    counter.add(p2);
    CHECK(counter.count() == 1);
    counter.remove(p1);
    CHECK(counter.count() == 0);
}

TEST_CASE("edge list round trip") {
    const char* text =
        "# tiny\n"
        "pair S1 R1\n"
        "pair S2 R2\n"
        "edge a S1 u\nedge b S2 u\nedge c u v\nedge d v R1\nedge e v R2\n"
        "path 0 a c d\npath 1 b c e\n"
        "intended M 1\n";
    Instance inst = parse_edge_list(text);
    CHECK(inst.pairs.size() == 2);
    CHECK(inst.notes == "tiny");
    REQUIRE(inst.systems);
    CHECK(count_mergings(std::span<const PathSystem>(*inst.systems)) == 1);
    Instance again = parse_edge_list(serialize_edge_list(inst));
    CHECK(same_structure(inst, again));
    CHECK_THROWS_AS(parse_edge_list("pair S T\nsource S\nsink T\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("edge a S\n"), Error);
}
