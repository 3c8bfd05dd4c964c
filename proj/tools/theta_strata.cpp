#include <iostream>

#include "theta/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = theta::cli::run(args);
  std::cout << result.output;
  for (const auto& d : result.diagnostics) {
    std::cerr << d;
    if (d.empty() || d.back() != '\n') std::cerr << '\n';
  }
  return result.exit_code;
}
