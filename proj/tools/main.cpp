#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> cap_env;
  if (const char* cap = std::getenv("PADIC_NEWTON_CAP")) cap_env = cap;
  return padic::cli::run(args, std::cout, std::cerr, cap_env);
}
