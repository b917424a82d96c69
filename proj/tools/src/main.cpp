#include <iostream>

#include "graphflag_cli/cli.hpp"

int main(int argc, char** argv) {
  return graphflag::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
