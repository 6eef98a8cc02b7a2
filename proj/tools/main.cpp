#include <iostream>
#include <string>
#include <vector>

#include "teleseq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return teleseq::cli::run(std::move(args), std::cout, std::cerr);
}
