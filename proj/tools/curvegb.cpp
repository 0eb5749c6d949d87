#include <iostream>
#include <string>
#include <vector>

#include <curvegb/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return curvegb::cli::run(std::move(args), std::cout, std::cerr);
}
