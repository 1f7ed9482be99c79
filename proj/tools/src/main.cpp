#include <iostream>
#include <string>
#include <vector>

#include "shgauge_cli/runner.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return shgauge::cli::run_command(args, std::cout, std::cerr);
}
