#include <iostream>

#include "haantjes/cli.hpp"

int main(int argc, char** argv) {
  return haantjes::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
