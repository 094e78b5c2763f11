#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  admintm::cli::Terminal terminal;
  terminal.color = std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO) != 0;
  return admintm::cli::run(args, std::cin, std::cout, std::cerr, terminal);
}
