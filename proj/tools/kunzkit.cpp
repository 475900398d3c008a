#include <iostream>
#include <string>
#include <vector>

#include "kunzkit/cli.hpp"

int main(int argc, char** argv) {
    return kunzkit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
