#include <iostream>

#include "hgw/cli.hpp"

int main(int argc, char** argv) { return hgw::cli_dispatch(argc, argv, std::cout, std::cerr); }
