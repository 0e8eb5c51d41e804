#include <iostream>

#include "mergepath/cli.hpp"

int main(int argc, char** argv) {
    const auto r = mergepath::run_cli({argv + 1, argv + argc});
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
