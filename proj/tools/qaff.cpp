#include <iostream>

#include "qaff/cli.hpp"

int main(int argc, char** argv) {
  return qaff::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
