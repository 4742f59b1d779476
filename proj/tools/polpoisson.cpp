#include "polpoisson/cli.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

#include <unistd.h>

int main(int argc, char** argv)
{
  const char* color = std::getenv("POLPOISSON_COLOR");
  polpoisson::CliEnvironment env;
  env.color = isatty(STDOUT_FILENO) && !(color && std::strcmp(color, "0") == 0);
  return polpoisson::run_cli(argc, argv, std::cout, std::cerr, env);
}
