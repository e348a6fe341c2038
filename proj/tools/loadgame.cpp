#include <iostream>

#include "loadgame/cli.hpp"

int main(int argc, char** argv) {
  return loadgame::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
