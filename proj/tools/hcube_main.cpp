#include <iostream>
#include <vector>

#include "hcube/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  hcube::CommandResult result = hcube::run_cli(args, &std::cin);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  return result.exit_code;
}
