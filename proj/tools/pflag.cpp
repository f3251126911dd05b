#include <iostream>

#include "pflag/cli.hpp"

int main(int argc, char** argv) {
    return pflag::cli_dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
