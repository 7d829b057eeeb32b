#include <iostream>
#include <string>
#include <vector>

#include "annular/cli.hpp"

int main(int argc, char** argv) {
  return annular::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
