#pragma once

// Instances and the plain-text edge-list format shared by the CLI and the
// frozen data files.
//
//   # comment
//   pair <source> <sink>          repeatable; distinct-terminal variant
//   source <S> / sink <R>         single-source variant (sink repeatable)
//   edge <id> <tail> <head>
//   cyclic                        permit directed cycles
//   path <pair-index> <edge-id>...  optional preset path system member
//   intended <M|Mstar> <count>    optional expected minimum merging count

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mergepath/graph.hpp"
#include "mergepath/menger.hpp"

namespace mergepath {

enum class Variant { M, Mstar };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);  // throws ParseError

struct Intended {
    Variant variant = Variant::M;
    std::size_t value = 0;
    friend bool operator==(const Intended&, const Intended&) = default;
};

struct Instance {
    Dag graph;
    std::vector<PairSpec> pairs;
    bool single_source = false;
    // Preset systems (one per pair) when the file carries `path` lines.
    std::optional<std::vector<PathSystem>> systems;
    std::optional<Intended> intended;
    std::string notes;

    std::vector<std::size_t> cuts() const;
    Variant natural_variant() const { return single_source ? Variant::Mstar : Variant::M; }
};

Instance parse_edge_list(std::string_view text);
Instance read_edge_list(const std::string& file_path);
std::string serialize_edge_list(const Instance& instance);
void write_edge_list(const Instance& instance, const std::string& file_path);

// Structural equality: graph, pairs, variant, preset systems and intended value.
bool same_structure(const Instance& a, const Instance& b);

}  // namespace mergepath
