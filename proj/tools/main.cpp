#include <string>
#include <vector>

#include "poly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return poly::run_command(args);
}
