#include <iostream>
#include <string>
#include <vector>

#include "fleetbound/cli.h"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fleetbound::RunCli(args, std::cout, std::cerr);
}
