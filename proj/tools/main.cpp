#include <iostream>
#include <vector>

#include "strictclose/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return strictclose::dispatch(args, std::cout, std::cerr);
}
