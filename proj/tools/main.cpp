#include <iostream>
#include <vector>

#include "ehrhart/cli.hpp"

int main(int argc, char** argv) {
    return ehrhart::cli::run(std::vector<std::string>(argv + 1, argv + argc),
                             std::cout, std::cerr);
}
