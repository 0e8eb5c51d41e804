#include "mergepath/instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mergepath {

std::string_view to_string(Variant v) { return v == Variant::M ? "M" : "Mstar"; }

Variant parse_variant(std::string_view text) {
    if (text == "M") return Variant::M;
    if (text == "Mstar" || text == "M*") return Variant::Mstar;
    throw Error(ErrorCode::ParseError, "unknown variant '" + std::string(text) + "'");
}

std::vector<std::size_t> Instance::cuts() const {
    std::vector<std::size_t> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(min_cut(graph, p.source, p.sink));
    return out;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Instance parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> pair_names;
    std::optional<std::string> source;
    std::vector<std::string> sinks;
    std::vector<EdgeSpec> edges;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> path_lines;
    std::optional<Intended> intended;
    bool cyclic = false;
    std::string notes;

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            if (line_no > 0 && line.find_first_not_of(" \t") == hash) {
                auto body = line.substr(hash + 1);
                if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
                if (!notes.empty()) notes += '\n';
                notes += body;
            }
            line = line.substr(0, hash);
        }
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "pair") {
            if (tok.size() != 3) fail(line_no, "expected 'pair <source> <sink>'");
            pair_names.emplace_back(tok[1], tok[2]);
        } else if (kw == "source") {
            if (tok.size() != 2) fail(line_no, "expected 'source <S>'");
            if (source && *source != tok[1]) fail(line_no, "second source declared");
            source = tok[1];
        } else if (kw == "sink") {
            if (tok.size() != 2) fail(line_no, "expected 'sink <R>'");
            sinks.push_back(tok[1]);
        } else if (kw == "edge") {
            if (tok.size() != 4) fail(line_no, "expected 'edge <id> <u> <v>'");
            edges.push_back(EdgeSpec{tok[1], tok[2], tok[3]});
        } else if (kw == "cyclic") {
            if (tok.size() != 1) fail(line_no, "'cyclic' takes no arguments");
            cyclic = true;
        } else if (kw == "path") {
            if (tok.size() < 3) fail(line_no, "expected 'path <pair-index> <edge>...'");
            std::size_t idx = 0;
            try {
                idx = std::stoul(tok[1]);
            } catch (const std::exception&) {
                fail(line_no, "bad pair index '" + tok[1] + "'");
            }
            path_lines.emplace_back(idx, std::vector<std::string>(tok.begin() + 2, tok.end()));
        } else if (kw == "intended") {
            if (tok.size() != 3) fail(line_no, "expected 'intended <M|Mstar> <count>'");
            try {
                intended = Intended{parse_variant(tok[1]), std::stoul(tok[2])};
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                fail(line_no, "bad count '" + tok[2] + "'");
            }
        } else {
            fail(line_no, "unknown keyword '" + kw + "'");
        }
    }

    if (!pair_names.empty() && (source || !sinks.empty()))
        throw Error(ErrorCode::ParseError, "mixing 'pair' with 'source'/'sink' lines");
    if (source.has_value() != !sinks.empty())
        throw Error(ErrorCode::ParseError, "'source' needs at least one 'sink' and vice versa");

    Instance inst;
    inst.single_source = source.has_value();
    if (inst.single_source)
        for (const auto& r : sinks) pair_names.emplace_back(*source, r);

    std::vector<std::string> terminals;
    for (const auto& [s, r] : pair_names) {
        if (s == r) throw Error(ErrorCode::ParseError, "pair with identical source and sink '" + s + "'");
        terminals.push_back(s);
        terminals.push_back(r);
    }
    try {
        inst.graph = Dag::from_edges(edges, terminals, cyclic);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CyclicGraph) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
    for (std::size_t i = 0; i < pair_names.size(); ++i)
        inst.pairs.push_back(PairSpec{inst.graph.vertex(pair_names[i].first),
                                      inst.graph.vertex(pair_names[i].second), i});

    if (!path_lines.empty()) {
        std::vector<PathSystem> systems;
        for (const auto& p : inst.pairs) systems.push_back(PathSystem{p, {}});
        for (auto& [idx, names] : path_lines) {
            if (idx >= systems.size())
                throw Error(ErrorCode::ParseError, "path refers to pair " + std::to_string(idx));
            try {
                systems[idx].paths.push_back(Path::from_names(inst.graph, names));
            } catch (const Error& e) {
                throw Error(ErrorCode::ParseError, e.what());
            }
        }
        inst.systems = std::move(systems);
    }
    inst.intended = intended;
    inst.notes = std::move(notes);
    return inst;
}

Instance read_edge_list(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + file_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Instance& inst) {
    std::ostringstream out;
    const Dag& g = inst.graph;
    if (!inst.notes.empty()) {
        std::istringstream notes(inst.notes);
        std::string line;
        while (std::getline(notes, line)) out << "# " << line << '\n';
    }
    if (g.cycles_allowed()) out << "cyclic\n";
    if (inst.single_source && !inst.pairs.empty()) {
        out << "source " << g.vertex_name(inst.pairs.front().source) << '\n';
        for (const auto& p : inst.pairs) out << "sink " << g.vertex_name(p.sink) << '\n';
    } else {
        for (const auto& p : inst.pairs)
            out << "pair " << g.vertex_name(p.source) << ' ' << g.vertex_name(p.sink) << '\n';
    }
    for (const auto& e : g.edge_specs()) out << "edge " << e.id << ' ' << e.tail << ' ' << e.head << '\n';
    if (inst.systems) {
        for (const auto& sys : *inst.systems)
            for (const auto& p : sys.paths) {
                out << "path " << sys.pair.index;
                for (const auto& n : p.edge_names(g)) out << ' ' << n;
                out << '\n';
            }
    }
    if (inst.intended) out << "intended " << to_string(inst.intended->variant) << ' ' << inst.intended->value << '\n';
    return out.str();
}

void write_edge_list(const Instance& instance, const std::string& file_path) {
    std::ofstream out(file_path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + file_path + "'");
    out << serialize_edge_list(instance);
}

bool same_structure(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.pairs == b.pairs && a.single_source == b.single_source &&
           a.systems == b.systems && a.intended == b.intended;
}

}  // namespace mergepath
