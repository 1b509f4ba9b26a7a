#include <iostream>
#include <string>
#include <vector>

#include <coxheap/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coxheap::cli::run(args, std::cout, std::cerr);
}
