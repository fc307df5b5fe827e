#include <iostream>

#include "mvg/cli.hpp"

int main(int argc, char** argv) {
  return mvg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
