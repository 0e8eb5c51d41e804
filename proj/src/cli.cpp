#include "mergepath/cli.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mergepath/bounds.hpp"
#include "mergepath/generators.hpp"
#include "mergepath/instance.hpp"
#include "mergepath/merging.hpp"
#include "mergepath/oracle.hpp"
#include "mergepath/rerouting.hpp"

namespace mergepath {
namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded: return 3;
        case ErrorCode::CyclicInput: return 4;
        default: return 2;
    }
}

json summary(const Instance& inst) {
    json pairs = json::array();
    for (const auto& p : inst.pairs)
        pairs.push_back({inst.graph.vertex_name(p.source), inst.graph.vertex_name(p.sink)});
    return {{"vertices", inst.graph.vertex_count()},
            {"edges", inst.graph.edge_count()},
            {"pairs", pairs},
            {"single_source", inst.single_source},
            {"cuts", inst.cuts()}};
}

json systems_json(const Dag& g, const std::vector<PathSystem>& systems) {
    json out = json::array();
    for (const auto& s : systems) {
        json paths = json::array();
        for (const auto& p : s.paths) paths.push_back(p.edge_names(g));
        out.push_back({{"pair", s.pair.index}, {"paths", paths}});
    }
    return out;
}

json names(const Dag& g, const std::vector<EdgeId>& edges) {
    json out = json::array();
    for (EdgeId e : edges) out.push_back(g.edge_name(e));
    return out;
}

std::vector<PathSystem> initial_systems(const Instance& inst, std::optional<std::uint64_t> seed) {
    if (inst.systems && !seed) return *inst.systems;
    std::vector<PathSystem> out;
    MengerOptions opt;
    opt.shuffle_seed = seed;
    for (const auto& p : inst.pairs) out.push_back(menger_paths(inst.graph, p, opt));
    return out;
}

json bound_json(const BoundReport& r) {
    json j{{"variant", std::string(to_string(r.variant))},
           {"cuts", r.cuts},
           {"lower", r.lower},
           {"upper", r.upper},
           {"provenance", r.provenance}};
    j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    return j;
}

struct Report {
    json body;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Report(const std::string& command) { body["command"] = command; }

    std::string finish() {
        body["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return body.dump(2) + "\n";
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ValidationFailure, "cannot write '" + path + "'");
    f << text;
}

}  // namespace

std::vector<std::string> encoding_nodes(const Dag& g, const std::vector<PathSystem>& systems) {
    std::set<std::string> out;
    for (EdgeId e : merging_edges(systems)) out.insert(g.vertex_name(g.edge(e).tail));
    return {out.begin(), out.end()};
}

std::string to_dot(const Dag& g, const std::vector<PathSystem>& systems) {
    const auto merges = merging_edges(systems);
    const std::set<EdgeId> merge_set(merges.begin(), merges.end());
    const auto enc = encoding_nodes(g, systems);
    const std::set<std::string> enc_set(enc.begin(), enc.end());
    std::map<EdgeId, std::vector<std::string>> users;
    for (const auto& s : systems)
        for (std::size_t h = 0; h < s.paths.size(); ++h)
            for (EdgeId e : s.paths[h].edges())
                users[e].push_back(std::to_string(s.pair.index) + "." + std::to_string(h));

    std::ostringstream out;
    out << "digraph G {\n  rankdir=LR;\n";
    out << "  // mergings: " << merges.size() << "\n  // encoding nodes:";
    for (const auto& v : enc) out << ' ' << v;
    out << '\n';
    for (const auto& v : g.vertex_names()) {
        out << "  \"" << v << "\"";
        if (enc_set.count(v)) out << " [style=filled, fillcolor=orange]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        out << "  \"" << g.vertex_name(ed.tail) << "\" -> \"" << g.vertex_name(ed.head) << "\" [label=\"" << ed.name;
        if (auto it = users.find(e); it != users.end()) {
            out << " (";
            for (std::size_t k = 0; k < it->second.size(); ++k) out << (k ? "," : "") << it->second[k];
            out << ")";
        }
        out << "\"";
        if (merge_set.count(e))
            out << ", color=red, penwidth=2.5";
        else if (!users.count(e))
            out << ", color=gray";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

CliOutput run_cli(const std::vector<std::string>& args) {
    CliOutput result;
    CLI::App app{"Menger path systems with few mergings"};
    app.require_subcommand(1);

    std::string file, source, sink, variant_text, dot_path, out_path, gen_name;
    std::optional<std::uint64_t> seed;
    bool allow_cyclic = false, regen = false;
    std::size_t budget = 1'000'000;
    int jobs = 0;
    std::vector<std::size_t> cuts, params;

    auto* mincut = app.add_subcommand("mincut", "min-cut between two vertices");
    mincut->add_option("file", file)->required();
    mincut->add_option("source", source)->required();
    mincut->add_option("sink", sink)->required();

    auto* paths = app.add_subcommand("paths", "one Menger path system per pair and their merging count");
    paths->add_option("file", file)->required();
    paths->add_option("--seed", seed, "shuffle the decomposition order");

    auto* minimize_cmd = app.add_subcommand("minimize", "reroute until no rule lowers the merging count");
    minimize_cmd->add_option("file", file)->required();
    minimize_cmd->add_option("--variant", variant_text, "M or Mstar");
    minimize_cmd->add_option("--seed", seed, "start from a shuffled decomposition");
    minimize_cmd->add_option("--dot", dot_path, "write the final systems as DOT");
    minimize_cmd->add_flag("--allow-cyclic", allow_cyclic, "count only on cyclic graphs");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum over all Menger systems");
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--budget", budget);
    oracle_cmd->add_option("--jobs", jobs);

    auto* bounds_cmd = app.add_subcommand("bounds", "bounds for a cut tuple");
    bounds_cmd->add_option("--variant", variant_text)->required();
    bounds_cmd->add_option("cuts", cuts)->required();

    auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
    gen_cmd->add_option("name", gen_name);
    gen_cmd->add_option("params", params);
    gen_cmd->add_option("--out", out_path, "file (or directory with --regen-extremal)");
    gen_cmd->add_flag("--regen-extremal", regen, "rerun the extremal searches and refreeze data files");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.code = 2;
        result.err = std::string(e.what()) + "\n";
        return result;
    }

    try {
        if (*mincut) {
            const Instance inst = read_edge_list(file);
            Report r("mincut");
            r.body["instance"] = summary(inst);
            r.body["results"] = {{"source", source},
                                 {"sink", sink},
                                 {"min_cut", min_cut(inst.graph, inst.graph.vertex(source), inst.graph.vertex(sink))}};
            result.out = r.finish();
        } else if (*paths) {
            const Instance inst = read_edge_list(file);
            Report r("paths");
            r.body["instance"] = summary(inst);
            const auto systems = initial_systems(inst, seed ? seed : std::optional<std::uint64_t>{});
            r.body["results"] = {{"systems", systems_json(inst.graph, systems)},
                                 {"mergings", count_mergings(systems)},
                                 {"merge_edges", names(inst.graph, merging_edges(systems))}};
            result.out = r.finish();
        } else if (*minimize_cmd) {
            const Instance inst = read_edge_list(file);
            const Variant variant = variant_text.empty() ? inst.natural_variant() : parse_variant(variant_text);
            if (variant != inst.natural_variant())
                throw Error(ErrorCode::ParseError, "variant " + std::string(to_string(variant)) +
                                                       " does not match the instance's terminals");
            Report r("minimize");
            r.body["instance"] = summary(inst);
            const auto start = initial_systems(inst, seed);
            json res{{"variant", std::string(to_string(variant))}, {"initial", count_mergings(start)}};
            std::vector<PathSystem> final_systems = start;
            if (!inst.graph.acyclic()) {
                if (!allow_cyclic)
                    throw Error(ErrorCode::CyclicInput, "graph has a directed cycle; pass --allow-cyclic to count only");
                result.err += "cyclic graph: counting only\n";
                res["minimized"] = false;
            } else {
                MinimizeResult m = minimize(inst.graph, start);
                final_systems = m.systems;
                res["minimized"] = true;
                res["trace"] = json::parse(trace_to_json(inst.graph, m.trace));
                const BoundReport b = bound_report(variant, inst.cuts());
                res["bounds"] = bound_json(b);
                res["within_upper"] = count_mergings(final_systems) <= b.upper;
            }
            res["final"] = count_mergings(final_systems);
            json per_pair = json::array();
            for (std::size_t x = 0; x < final_systems.size(); ++x)
                for (std::size_t y = x + 1; y < final_systems.size(); ++y)
                    per_pair.push_back({{"pair", {x, y}}, {"mergings", pairwise_count(final_systems[x], final_systems[y])}});
            res["per_pair"] = per_pair;
            res["merge_edges"] = names(inst.graph, merging_edges(final_systems));
            res["encoding_nodes"] = encoding_nodes(inst.graph, final_systems);
            res["systems"] = systems_json(inst.graph, final_systems);
            r.body["results"] = res;
            if (!dot_path.empty()) write_file(dot_path, to_dot(inst.graph, final_systems));
            result.out = r.finish();
        } else if (*oracle_cmd) {
            const Instance inst = read_edge_list(file);
            if (!inst.graph.acyclic()) throw Error(ErrorCode::CyclicInput, "the oracle needs an acyclic graph");
            Report r("oracle");
            r.body["instance"] = summary(inst);
            OracleOptions opt;
            opt.budget = budget;
            opt.jobs = jobs;
            const OracleResult o = brute_force_min(inst.graph, inst.pairs, opt);
            r.body["results"] = {{"value", o.value},
                                 {"variant", std::string(to_string(inst.natural_variant()))},
                                 {"systems_per_pair", o.systems_per_pair},
                                 {"nodes", o.nodes},
                                 {"witness", systems_json(inst.graph, o.witness)},
                                 {"merge_edges", names(inst.graph, merging_edges(o.witness))}};
            result.out = r.finish();
        } else if (*bounds_cmd) {
            Report r("bounds");
            r.body["results"] = bound_json(bound_report(parse_variant(variant_text), cuts));
            result.out = r.finish();
        } else if (*gen_cmd) {
            if (regen) {
                const std::string dir = out_path.empty() ? data_dir() : out_path;
                result.err += "regenerating extremal instances into " + dir + "\n";
                regenerate_extremal(dir);
                return result;
            }
            if (gen_name.empty()) throw Error(ErrorCode::UnknownGenerator, "generator name required");
            const std::string text = serialize_edge_list(generate(gen_name, params));
            if (out_path.empty())
                result.out = text;
            else
                write_file(out_path, text);
        }
    } catch (const Error& e) {
        result.code = exit_code_for(e.code());
        result.err += std::string(e.what()) + "\n";
    }
    return result;
}

}  // namespace mergepath
