#include "ahg/jobspec.hpp"

#include <iostream>

int main(int argc, char** argv) { return ahg::run_cli(argc, argv, std::cout, std::cerr); }
