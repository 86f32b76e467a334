#include <iostream>
#include <string>
#include <vector>

#include "coisocap/cli.hpp"

int main(int argc, char** argv) {
  return coisocap::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
