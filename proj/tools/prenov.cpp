#include "prenov/cli_io.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    prenov::CommandResult r = prenov::run_command(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
