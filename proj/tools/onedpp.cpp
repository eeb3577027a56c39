#include <iostream>

#include "onedpp_cli.hpp"

int main(int argc, char** argv) { return onedpp::cli::run(argc, argv, std::cout, std::cerr); }
