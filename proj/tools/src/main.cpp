#include "lawvere/cli/cli.hpp"

#include <iostream>

#ifndef LAWVERE_DATA_DIR
#define LAWVERE_DATA_DIR "data"
#endif

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return lawvere::cli::run_command(args, std::cout, std::cerr, LAWVERE_DATA_DIR);
}
