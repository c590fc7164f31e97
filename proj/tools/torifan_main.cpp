#include <iostream>
#include <vector>

#include "torifan/cli.hpp"

int main(int argc, char** argv) {
  return torifan::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                           std::cerr);
}
