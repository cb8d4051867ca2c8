#include <iostream>

#include "lamplighter/cli/run.hpp"

int main(int argc, char** argv) {
  return lamplighter::cli::run_cli(argc, argv, std::cout, std::cerr);
}
