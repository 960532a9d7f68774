#include <iostream>
#include <string>
#include <vector>

#include <ultrametric/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ultrametric::run(std::move(args), std::cout, std::cerr);
}
