#include <iostream>

#include "rowmotion/cli.hpp"

int main(int argc, char** argv) {
  return rowmotion::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
