#include "swh/front.hpp"

#include <iostream>

int main(int argc, char** argv) { return swh::cli_main(argc, argv, std::cout, std::cerr); }
