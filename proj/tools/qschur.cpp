#include "qschur/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    return qschur::cli::run(argc, argv, std::cout, std::cerr);
}
