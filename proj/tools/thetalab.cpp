#include <iostream>
#include <string>
#include <vector>

#include "thetalab/cli.hpp"

int main(int argc, char** argv) {
    return thetalab::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
