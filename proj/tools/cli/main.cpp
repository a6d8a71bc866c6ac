#include <cstdlib>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> cap_env;
  if (const char* v = std::getenv("FIBFIELD_CAP")) cap_env = v;
  return fibfield::cli::run(args, std::cout, std::cerr, cap_env);
}
