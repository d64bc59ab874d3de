#include <vector>

#include "dvis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dvis::dispatch(args);
}
