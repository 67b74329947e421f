#include <iostream>

#include "msslab/cli/app.hpp"

int main(int argc, char** argv) { return msslab::cli::run(argc, argv, std::cout, std::cerr); }
