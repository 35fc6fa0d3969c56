#include <cstring>
#include <iostream>

#include "gorenstein/acceptance.hpp"

int main(int argc, char** argv) {
  auto suite = gorenstein::Suite::All;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "fast") == 0) suite = gorenstein::Suite::Fast;
  }
  const auto results = gorenstein::run_acceptance(suite);
  return gorenstein::report(results, std::cout) ? 0 : 1;
}
