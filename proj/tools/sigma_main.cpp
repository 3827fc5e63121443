#include <iostream>
#include <string>
#include <vector>

#include "sigma/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const sigma::CommandResult r = sigma::run_cli(args, std::cin);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
