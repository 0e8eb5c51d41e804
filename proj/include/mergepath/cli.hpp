#pragma once

// Command-line surface. run_cli does all the work so tests can drive it
// in-process; tools/main.cpp only forwards argv and prints.
//
// Exit codes: 0 success, 2 parse or validation error, 3 oracle budget
// exhausted, 4 cyclic input.

#include <string>
#include <vector>

#include "mergepath/graph.hpp"
#include "mergepath/menger.hpp"

namespace mergepath {

struct CliOutput {
    int code = 0;
    std::string out;  // JSON report or generated file contents
    std::string err;  // log lines and error messages
};

// `args` excludes the program name.
CliOutput run_cli(const std::vector<std::string>& args);

// Merge edges drawn bold red; encoding nodes (tails of merge edges) filled
// and listed in a comment block. Output is byte-stable for equal inputs.
std::string to_dot(const Dag& g, const std::vector<PathSystem>& systems);

// Tails of the merge edges, sorted by name.
std::vector<std::string> encoding_nodes(const Dag& g, const std::vector<PathSystem>& systems);

}  // namespace mergepath
