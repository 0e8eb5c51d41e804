#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "mergepath/cli.hpp"
#include "mergepath/generators.hpp"
#include "mergepath/merging.hpp"

using namespace mergepath;
using nlohmann::json;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("mergepath_test_" + name)).string();
}

std::string save(const std::string& name, const Instance& inst) {
    const std::string p = temp_path(name);
    write_edge_list(inst, p);
    return p;
}

json run_ok(const std::vector<std::string>& args) {
    CliOutput r = run_cli(args);
    INFO(r.err);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("mincut") {
    const std::string bf = save("bf.txt", gen_butterfly());
    CHECK(run_ok({"mincut", bf, "S", "Y"})["results"]["min_cut"] == 2);
    const std::string one = temp_path("one.txt");
    std::ofstream(one) << "pair S T\nedge a S T\nedge b U V\n";
    CHECK(run_ok({"mincut", one, "S", "T"})["results"]["min_cut"] == 1);
    CHECK(run_ok({"mincut", one, "S", "V"})["results"]["min_cut"] == 0);
    CHECK(run_cli({"mincut", one, "S", "Q"}).code == 2);
}

TEST_CASE("minimize reports") {
    const std::string bf = save("bf.txt", gen_butterfly());
    const std::string dot = temp_path("bf.dot");
    json r = run_ok({"minimize", bf, "--dot", dot});
    CHECK(r["results"]["final"] == 1);
    CHECK(r["results"]["encoding_nodes"] == json::array({"W"}));
    CHECK(r["results"]["merge_edges"] == json::array({"WX"}));

    // The headline count is re-derivable from the reported paths.
    Instance inst = read_edge_list(bf);
    std::vector<PathSystem> systems;
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        PathSystem s{inst.pairs[i], {}};
        for (const auto& p : r["results"]["systems"][i]["paths"])
            s.paths.push_back(Path::from_names(inst.graph, p.get<std::vector<std::string>>()));
        systems.push_back(s);
    }
    CHECK(count_mergings(systems) == r["results"]["final"].get<std::size_t>());

    std::ifstream in(dot);
    const std::string first((std::istreambuf_iterator<char>(in)), {});
    CHECK(first.find("color=red") != std::string::npos);
    run_ok({"minimize", bf, "--dot", dot});
    std::ifstream again(dot);
    CHECK(std::string((std::istreambuf_iterator<char>(again)), {}) == first);

    CHECK(run_ok({"minimize", save("s3.txt", gen_star_2rep(3))})["results"]["final"] == 2);
    CHECK(run_cli({"minimize", bf, "--variant", "M"}).code == 2);
}

TEST_CASE("cyclic input") {
    const std::string cy = save("cy.txt", gen_cyclic_counterexample(4));
    CHECK(run_cli({"minimize", cy}).code == 4);
    json r = run_ok({"minimize", cy, "--allow-cyclic"});
    CHECK(r["results"]["final"] == 4);
    CHECK(r["results"]["minimized"] == false);
}

TEST_CASE("oracle and bounds") {
    CHECK(run_ok({"oracle", save("x22.txt", gen_extremal_22())})["results"]["value"] == 5);
    CHECK(run_ok({"oracle", save("bf.txt", gen_butterfly()), "--jobs", "2"})["results"]["value"] == 1);
    CHECK(run_cli({"oracle", save("x22.txt", gen_extremal_22()), "--budget", "2"}).code == 3);
    CHECK(run_ok({"bounds", "--variant", "M", "2", "2"})["results"]["exact"] == 5);
    CHECK(run_ok({"bounds", "--variant", "Mstar", "2", "2", "2", "2"})["results"]["exact"] == 3);
    CHECK(run_ok({"bounds", "--variant", "M", "1", "5"})["results"]["exact"] == 5);
    CHECK(run_cli({"bounds", "--variant", "M", "0", "2"}).code == 2);
}

TEST_CASE("gen") {
    CliOutput r = run_cli({"gen", "butterfly"});
    REQUIRE(r.code == 0);
    CHECK(parse_edge_list(r.out).graph.edge_count() == 9);
    const std::string out = temp_path("gen.txt");
    REQUIRE(run_cli({"gen", "cyclic", "4", "--out", out}).code == 0);
    CHECK_FALSE(read_edge_list(out).graph.acyclic());
    CHECK(parse_edge_list(run_cli({"gen", "star2rep", "1"}).out).intended->value == 0);
    CHECK(run_cli({"gen", "bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);
}
