#include "cli.hpp"

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return homcost::cli::run(args, std::cout, std::cerr);
}
