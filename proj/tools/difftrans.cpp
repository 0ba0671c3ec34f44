#include <iostream>
#include <string>
#include <vector>

#include "difftrans/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return difftrans::cli_run(args, std::cout, std::cerr);
}
