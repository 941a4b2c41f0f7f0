#include "kacpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return kacpoly::cli::run(argc, argv, std::cout, std::cerr);
}
