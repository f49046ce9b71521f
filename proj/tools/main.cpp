#include "nadslab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return nadslab::cli::run(argc, argv, std::cout, std::cerr);
}
