#include "racah/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  racah::cli::CliReport report = racah::cli::run(args);
  std::cout << report.out;
  std::cerr << report.err;
  return report.exit_code();
}
