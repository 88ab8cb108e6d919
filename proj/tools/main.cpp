#include <iostream>

#include "freeprod/cli.hpp"

int main(int argc, char** argv) {
  return freeprod::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
