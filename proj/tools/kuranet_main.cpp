#include <iostream>

#include "kuranet/cli.hpp"

int main(int argc, char** argv) {
    return kuranet::run_cli(argc, argv, std::cout, std::cerr);
}
